//! Random admissible instances for property tests and seeded verification.
//!
//! Roots are kept well away from the unit circle (inside roots have modulus
//! at most 0.6, outside roots at least 1.6) so that every instance is
//! decided far from the classification band.

use num_complex::Complex64;
use rand::Rng;

use crate::factorization::BlaschkeProduct;
use crate::halfplane::HalfPlaneRational;
use crate::multipliers::multiplier_space;
use crate::rational::RationalFunction;
use crate::roots::Root;
use crate::symbol::ToeplitzSymbol;

pub const INSIDE_MAX: f64 = 0.6;
pub const OUTSIDE_MIN: f64 = 1.6;
pub const OUTSIDE_MAX: f64 = 3.0;

fn polar<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> Complex64 {
    let r = rng.gen_range(lo..hi);
    Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
}

pub fn inside_point<R: Rng>(rng: &mut R) -> Complex64 {
    polar(rng, 0.0, INSIDE_MAX)
}

pub fn outside_point<R: Rng>(rng: &mut R) -> Complex64 {
    polar(rng, OUTSIDE_MIN, OUTSIDE_MAX)
}

/// Nonzero gain with modulus in `[0.5, 2]`.
pub fn gain<R: Rng>(rng: &mut R) -> Complex64 {
    polar(rng, 0.5, 2.0)
}

fn roots<R: Rng>(rng: &mut R, n: usize, inside: bool) -> Vec<Root> {
    (0..n)
        .map(|_| Root::simple(if inside { inside_point(rng) } else { outside_point(rng) }))
        .collect()
}

/// Circle-invertible symbol with `zi` inside zeros, `zo` outside zeros,
/// `pi` inside poles and `po` outside poles.
pub fn symbol_with<R: Rng>(rng: &mut R, zi: usize, zo: usize, pi: usize, po: usize) -> ToeplitzSymbol {
    let mut zeros = roots(rng, zi, true);
    zeros.extend(roots(rng, zo, false));
    let mut poles = roots(rng, pi, true);
    poles.extend(roots(rng, po, false));
    ToeplitzSymbol::new(RationalFunction::from_roots(gain(rng), zeros, poles)).expect("nonzero")
}

/// Circle-invertible symbol of total degree at most `max_degree`.
pub fn symbol<R: Rng>(rng: &mut R, max_degree: usize) -> ToeplitzSymbol {
    let total = rng.gen_range(0..=max_degree);
    let mut counts = [0usize; 4];
    for _ in 0..total {
        counts[rng.gen_range(0..4)] += 1;
    }
    symbol_with(rng, counts[0], counts[1], counts[2], counts[3])
}

/// Symbol with winding at most `-1`, hence a nontrivial kernel.
pub fn symbol_with_kernel<R: Rng>(rng: &mut R, max_degree: usize) -> ToeplitzSymbol {
    assert!(max_degree >= 1);
    loop {
        let s = symbol(rng, max_degree);
        if s.winding().is_some_and(|w| w < 0) {
            return s;
        }
    }
}

/// Outer rational with no zeros or poles on the closed disc (hence rigid).
pub fn outer<R: Rng>(rng: &mut R, max_zeros: usize, max_poles: usize) -> RationalFunction {
    let nz = rng.gen_range(0..=max_zeros);
    let np = rng.gen_range(0..=max_poles);
    RationalFunction::from_roots(gain(rng), roots(rng, nz, false), roots(rng, np, false))
}

pub fn blaschke<R: Rng>(rng: &mut R, degree: usize) -> BlaschkeProduct {
    BlaschkeProduct::from_zeros(roots(rng, degree, true)).expect("zeros inside")
}

/// Rational in `H^2` of the upper half-plane: poles in the lower half-plane,
/// numerator degree below denominator degree, total degree at most `max_degree`.
pub fn upper_h2<R: Rng>(rng: &mut R, max_degree: usize) -> HalfPlaneRational {
    let np = rng.gen_range(1..=max_degree.max(1));
    let nz = rng.gen_range(0..np).min(max_degree.saturating_sub(np));
    let pole = |rng: &mut R| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-3.0..-0.3));
    let zero = |rng: &mut R| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
    let poles = (0..np).map(|_| Root::simple(pole(rng))).collect();
    let zeros = (0..nz).map(|_| Root::simple(zero(rng))).collect();
    HalfPlaneRational::new(RationalFunction::from_roots(gain(rng), zeros, poles))
}

/// A triple for multiplier testing. About half the time `w` is drawn from
/// the multiplier space, otherwise it is an arbitrary rational.
pub fn multiplier_triple<R: Rng>(
    rng: &mut R,
) -> (RationalFunction, ToeplitzSymbol, ToeplitzSymbol) {
    let g = symbol_with_kernel(rng, 4);
    let h = symbol_with_kernel(rng, 5);
    if rng.gen_bool(0.5) {
        if let Ok(m) = multiplier_space(&g, &h) {
            if !m.space.is_trivial() {
                let w = m
                    .space
                    .basis()
                    .iter()
                    .map(|b| b.scale(gain(rng)))
                    .reduce(|a, b| &a + &b)
                    .expect("nonempty basis");
                if !w.is_zero() {
                    return (w, g, h);
                }
            }
        }
    }
    let w = symbol(rng, 4).into_value();
    (w, g, h)
}
