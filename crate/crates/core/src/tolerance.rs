//! Fixed numerical tolerances shared by every module.

use num_complex::Complex64;

/// Relative distance under which two roots are treated as the same root.
pub const EPS_ROOT: f64 = 1e-7;

/// Half-width of the band around |z| = 1 that counts as "on the circle".
pub const EPS_CIRCLE: f64 = 1e-9;

/// Roots closer than this to the circle (but outside the band) trigger a
/// classification warning.
pub const WARN_BAND: f64 = 1e-6;

/// Number of circle samples used for reconstruction checks.
pub const CIRCLE_SAMPLES: usize = 64;

pub fn roots_match(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= EPS_ROOT * 1f64.max(a.norm().max(b.norm()))
}

/// Where a point sits relative to the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Inside,
    OnCircle,
    Outside,
}

pub fn locate(z: Complex64) -> Location {
    let d = z.norm() - 1.0;
    if d.abs() < EPS_CIRCLE {
        Location::OnCircle
    } else if d < 0.0 {
        Location::Inside
    } else {
        Location::Outside
    }
}

/// True when `z` is outside the band but close enough to it that the
/// classification could flip under a tiny perturbation of the input.
pub fn near_band(z: Complex64) -> bool {
    let d = (z.norm() - 1.0).abs();
    (EPS_CIRCLE..WARN_BAND).contains(&d)
}

/// `n` equally spaced points on the unit circle, starting at 1.
pub fn circle_points(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|j| Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / n as f64))
        .collect()
}
