//! Brute-force numerical counterparts of the symbolic constructions.
//!
//! Nothing here shares code paths with the closed-form engine beyond
//! pointwise evaluation: Fourier coefficients come from an FFT of circle
//! samples, kernels from an SVD of a truncated Toeplitz matrix.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Result, ToeplitzError};
use crate::rational::RationalFunction;
use crate::symbol::ToeplitzSymbol;
use crate::tolerance::{circle_points, Location};

/// Relative singular-value threshold for null-space membership.
pub const NULL_THRESHOLD: f64 = 1e-8;

/// Largest degree cap the oracle will build before giving up on resolution.
pub const MAX_DEGREE_CAP: usize = 512;

/// Samples of a function at the `sample_count`-th roots of unity.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundarySampling {
    pub sample_count: usize,
    pub values: Vec<Complex64>,
}

impl BoundarySampling {
    pub fn of(f: &RationalFunction, sample_count: usize) -> Result<Self> {
        if f.has_circle_pole() {
            return Err(ToeplitzError::PoleOnCircle);
        }
        Ok(Self {
            sample_count,
            values: circle_points(sample_count).into_iter().map(|z| f.eval(z)).collect(),
        })
    }
}

/// Fourier coefficients `c_{-n} .. c_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierCoefficients {
    pub n: usize,
    pub sample_count: usize,
    coeffs: Vec<Complex64>,
}

impl FourierCoefficients {
    pub fn get(&self, k: i64) -> Complex64 {
        if k.unsigned_abs() as usize > self.n {
            panic!("Fourier index {k} outside -{0}..{0}", self.n);
        }
        self.coeffs[(k + self.n as i64) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(j, c)| (j as i64 - self.n as i64, *c))
    }
}

/// Slowest geometric decay rate of the Laurent coefficients on the circle.
fn decay_rate(f: &RationalFunction) -> f64 {
    f.poles()
        .iter()
        .map(|r| {
            let m = r.value.norm();
            if m == 0.0 {
                0.0
            } else {
                m.min(1.0 / m)
            }
        })
        .fold(0.0, f64::max)
}

fn samples_needed(rho: f64, digits: f64) -> usize {
    if rho <= 0.0 {
        return 0;
    }
    (digits * std::f64::consts::LN_10 / -rho.ln()).ceil() as usize
}

/// Default FFT size: at least 256 and `4n`, and enough that aliasing from the
/// nearest pole falls below double precision.
pub fn default_sample_count(f: &RationalFunction, n: usize) -> usize {
    let alias = samples_needed(decay_rate(f), 15.0) + 2 * n;
    256.max(4 * n).max(alias).next_power_of_two().min(1 << 22)
}

pub fn fourier_coefficients(f: &RationalFunction, n: usize) -> Result<FourierCoefficients> {
    fourier_coefficients_with(f, n, default_sample_count(f, n))
}

pub fn fourier_coefficients_with(
    f: &RationalFunction,
    n: usize,
    sample_count: usize,
) -> Result<FourierCoefficients> {
    assert!(sample_count > 2 * n, "sample count too small for index range");
    let mut buf = BoundarySampling::of(f, sample_count)?.values;
    FftPlanner::new().plan_fft_forward(sample_count).process(&mut buf);
    let scale = 1.0 / sample_count as f64;
    let coeffs = (-(n as i64)..=n as i64)
        .map(|k| buf[k.rem_euclid(sample_count as i64) as usize] * scale)
        .collect();
    Ok(FourierCoefficients {
        n,
        sample_count,
        coeffs,
    })
}

/// Orthonormal columns of Taylor coefficient vectors of length `degree_cap + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericSubspace {
    pub degree_cap: usize,
    pub basis_matrix: DMatrix<Complex64>,
}

impl NumericSubspace {
    pub fn dimension(&self) -> usize {
        self.basis_matrix.ncols()
    }

    /// Orthonormalize the column span of `m`, dropping numerically dependent columns.
    pub fn from_columns(degree_cap: usize, m: DMatrix<Complex64>) -> Self {
        assert_eq!(m.nrows(), degree_cap + 1);
        if m.ncols() == 0 {
            return Self::empty(degree_cap);
        }
        let svd = m.svd(true, false);
        let u = svd.u.expect("left singular vectors");
        let smax = svd.singular_values.max();
        let keep: Vec<usize> = (0..svd.singular_values.len())
            .filter(|&j| smax > 0.0 && svd.singular_values[j] > 1e-12 * smax)
            .collect();
        let cols: Vec<_> = keep.iter().map(|&j| u.column(j).into_owned()).collect();
        if cols.is_empty() {
            return Self::empty(degree_cap);
        }
        Self {
            degree_cap,
            basis_matrix: DMatrix::from_columns(&cols),
        }
    }

    pub fn empty(degree_cap: usize) -> Self {
        Self {
            degree_cap,
            basis_matrix: DMatrix::zeros(degree_cap + 1, 0),
        }
    }

    /// Largest deviation of the Gram matrix from the identity.
    pub fn orthonormality_error(&self) -> f64 {
        let g = self.basis_matrix.adjoint() * &self.basis_matrix;
        let n = g.nrows();
        (g - DMatrix::<Complex64>::identity(n, n))
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }
}

/// Span of the Taylor expansions of analytic rational functions.
pub fn subspace_from_rationals(fs: &[RationalFunction], degree_cap: usize) -> Result<NumericSubspace> {
    let mut m = DMatrix::zeros(degree_cap + 1, fs.len());
    for (j, f) in fs.iter().enumerate() {
        if let Some(p) = f.pole_in_closed_disc() {
            return Err(ToeplitzError::NotInHardySpace(p.to_string()));
        }
        for (i, c) in f.taylor_coefficients(degree_cap + 1)?.into_iter().enumerate() {
            m[(i, j)] = c;
        }
    }
    Ok(NumericSubspace::from_columns(degree_cap, m))
}

/// Null space of a truncated Toeplitz matrix, with the evidence behind the
/// dimension decision.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericKernel {
    pub subspace: NumericSubspace,
    pub singular_values: Vec<f64>,
    /// Smallest kept over largest dropped singular value; infinite when
    /// either side is empty.
    pub gap_ratio: f64,
    pub warnings: Vec<String>,
}

impl NumericKernel {
    pub fn dimension(&self) -> usize {
        self.subspace.dimension()
    }
}

fn symbol_degree(s: &RationalFunction) -> usize {
    (s.zero_count() + s.pole_count()) as usize
}

/// Degree cap large enough that truncating the kernel basis costs less than
/// `1e-13` relative, and large enough to expose `dim` ladder vectors.
pub fn default_degree_cap(s: &ToeplitzSymbol) -> usize {
    let v = s.value();
    let dim = (-s.winding().unwrap_or(0)).max(0) as usize;
    let nearest = v
        .zeros_at(Location::Outside)
        .gt(&0)
        .then(|| {
            v.zeros()
                .iter()
                .map(|r| r.value.norm())
                .filter(|&m| m > 1.0)
                .fold(f64::INFINITY, f64::min)
        })
        .unwrap_or(f64::INFINITY);
    let truncation = if nearest.is_finite() {
        dim + samples_needed(1.0 / nearest, 13.0)
    } else {
        0
    };
    (4 * symbol_degree(v) + 16).max(truncation)
}

/// Null space of `f -> P_+(s f)` on polynomials of degree at most `degree_cap`.
pub fn numeric_kernel(s: &ToeplitzSymbol, degree_cap: Option<usize>) -> Result<NumericKernel> {
    s.require_invertible()?;
    let v = s.value();
    let mut warnings = Vec::new();
    let wanted = degree_cap.unwrap_or_else(|| default_degree_cap(s));
    let cap = if wanted > MAX_DEGREE_CAP {
        warnings.push(format!(
            "ResolutionWarning: degree cap {wanted} exceeds {MAX_DEGREE_CAP}; kernel may be under-resolved"
        ));
        MAX_DEGREE_CAP
    } else {
        wanted
    };
    for r in v.near_band_roots() {
        warnings.push(format!("ClassificationWarning: root {r} is close to the unit circle"));
    }
    let rho = decay_rate(v);
    if rho > 1.0 / 1.05 {
        warnings.push(format!(
            "ResolutionWarning: a pole lies within {:.3} of the circle",
            1.0 / rho - 1.0
        ));
    }
    let tail = samples_needed(rho, 16.0).min(4 * MAX_DEGREE_CAP);
    let rows = cap + 1 + symbol_degree(v) + tail;
    let coeffs = fourier_coefficients(v, rows + cap)?;
    let a = DMatrix::from_fn(rows, cap + 1, |i, j| coeffs.get(i as i64 - j as i64));
    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors");
    let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    let smax = sv.iter().copied().fold(0.0, f64::max);
    let threshold = NULL_THRESHOLD * smax;
    // nalgebra returns a thin SVD: rows >= cols, so v_t is square
    let null: Vec<_> = (0..sv.len())
        .filter(|&j| sv[j] <= threshold)
        .map(|j| v_t.row(j).adjoint())
        .collect();
    let kept_min = sv.iter().copied().filter(|&x| x > threshold).fold(f64::INFINITY, f64::min);
    let dropped_max = sv.iter().copied().filter(|&x| x <= threshold).fold(f64::NEG_INFINITY, f64::max);
    let gap_ratio = if kept_min.is_finite() && dropped_max.is_finite() {
        if dropped_max == 0.0 {
            f64::INFINITY
        } else {
            kept_min / dropped_max
        }
    } else {
        f64::INFINITY
    };
    let subspace = if null.is_empty() {
        NumericSubspace::empty(cap)
    } else {
        NumericSubspace::from_columns(cap, DMatrix::from_columns(&null))
    };
    Ok(NumericKernel {
        subspace,
        singular_values: sv,
        gap_ratio,
        warnings,
    })
}

/// Largest principal angle between two subspaces of the same coefficient space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrincipalAngle {
    pub angle: f64,
    /// The dimensions differ; `angle` then measures how far the smaller
    /// subspace is from lying inside the larger one.
    pub dimension_mismatch: bool,
}

pub fn principal_angle(a: &NumericSubspace, b: &NumericSubspace) -> Result<PrincipalAngle> {
    if a.degree_cap != b.degree_cap {
        return Err(ToeplitzError::DimensionMismatch(a.degree_cap, b.degree_cap));
    }
    let (small, large) = if a.dimension() <= b.dimension() { (a, b) } else { (b, a) };
    let dimension_mismatch = a.dimension() != b.dimension();
    if small.dimension() == 0 {
        return Ok(PrincipalAngle {
            angle: 0.0,
            dimension_mismatch,
        });
    }
    let q = &large.basis_matrix;
    let x = &small.basis_matrix;
    // sin of the largest angle is the norm of the part of x outside span(q)
    let residual = x - q * (q.adjoint() * x);
    let sin = residual
        .svd(false, false)
        .singular_values
        .max()
        .clamp(0.0, 1.0);
    Ok(PrincipalAngle {
        angle: sin.asin(),
        dimension_mismatch,
    })
}

/// Winding number of `s` around 0 by summing argument increments along the circle.
pub fn argument_principle_winding(s: &RationalFunction) -> Result<i32> {
    if s.is_zero() || s.has_circle_zero_or_pole() {
        return Err(ToeplitzError::NotInvertibleOnCircle);
    }
    let count = |n: usize| -> f64 {
        let pts = circle_points(n);
        let vals: Vec<Complex64> = pts.iter().map(|&z| s.eval(z)).collect();
        let total: f64 = (0..n).map(|j| (vals[(j + 1) % n] / vals[j]).arg()).sum();
        total / std::f64::consts::TAU
    };
    let mut n = 1024;
    let mut prev = count(n);
    while n < 1 << 20 {
        n *= 2;
        let next = count(n);
        if (next - prev).abs() < 1e-6 && (next - next.round()).abs() < 1e-6 {
            return Ok(next.round() as i32);
        }
        prev = next;
    }
    Ok(prev.round() as i32)
}

/// `L^2` norm on the circle with normalized arc length, by the trapezoid rule.
pub fn circle_l2_norm(f: &RationalFunction, sample_count: usize) -> Result<f64> {
    let s = BoundarySampling::of(f, sample_count)?;
    Ok((s.values.iter().map(|v| v.norm_sqr()).sum::<f64>() / sample_count as f64).sqrt())
}

/// `L^2` norm on the real line by adaptive quadrature after `s = tan t`.
pub fn line_l2_norm(f: &RationalFunction, tol: f64) -> f64 {
    let h = std::f64::consts::FRAC_PI_2;
    let integrand = |t: f64| {
        let c = t.cos();
        if c == 0.0 {
            return 0.0;
        }
        f.eval(Complex64::new(t.tan(), 0.0)).norm_sqr() / (c * c)
    };
    // split at the origin so pole pairs near 0 do not straddle a single panel
    let left = quadrature::integrate(integrand, -h, 0.0, tol);
    let right = quadrature::integrate(integrand, 0.0, h, tol);
    (left.integral + right.integral).sqrt()
}

/// Relative root-mean-square mismatch of `f` against `g` on circle samples.
pub fn circle_residual(f: &RationalFunction, g: &RationalFunction, sample_count: usize) -> Result<f64> {
    let a = BoundarySampling::of(f, sample_count)?;
    let b = BoundarySampling::of(g, sample_count)?;
    let diff: f64 = a.values.iter().zip(&b.values).map(|(x, y)| (x - y).norm_sqr()).sum();
    let base: f64 = b.values.iter().map(|y| y.norm_sqr()).sum();
    Ok(if base == 0.0 { diff.sqrt() } else { (diff / base).sqrt() })
}

/// Fourier coefficients of `s b` at indices `0..=n`, whose vanishing is the
/// numerical membership test for `b` in `ker T_s`.
pub fn membership_residual(s: &ToeplitzSymbol, b: &RationalFunction, n: usize) -> Result<f64> {
    let prod = s.value() * b;
    let c = fourier_coefficients(&prod, n)?;
    let scale = circle_l2_norm(b, 256)?.max(f64::MIN_POSITIVE);
    Ok((0..=n as i64).map(|k| c.get(k).norm()).fold(0.0, f64::max) / scale)
}
