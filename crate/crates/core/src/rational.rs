//! Reduced rational functions over complex doubles.
//!
//! A [`RationalFunction`] is stored in factored form, `gain * prod(z - a)^m /
//! prod(z - b)^n`, with zeros and poles cancelled against each other on every
//! construction. Products, quotients, powers and circle conjugation act on the
//! factors directly and never call the root finder; only sums expand to
//! coefficients and re-extract roots.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Result, ToeplitzError};
use crate::poly::ComplexPolynomial;
use crate::print;
use crate::roots::{merge_roots, poly_roots, Root};
use crate::tolerance::{circle_points, locate, near_band, roots_match, Location};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const SNAP_TO_ZERO: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    gain: Complex64,
    zeros: Vec<Root>,
    poles: Vec<Root>,
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self {
            gain: ZERO,
            zeros: Vec::new(),
            poles: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(ONE)
    }

    pub fn constant(c: Complex64) -> Self {
        Self {
            gain: c,
            zeros: Vec::new(),
            poles: Vec::new(),
        }
    }

    pub fn real(c: f64) -> Self {
        Self::constant(Complex64::new(c, 0.0))
    }

    /// The identity function `z`.
    pub fn z() -> Self {
        Self::z_power(1)
    }

    /// `z^k` for any integer `k`.
    pub fn z_power(k: i32) -> Self {
        let root = Root::new(ZERO, k.unsigned_abs());
        match k.cmp(&0) {
            std::cmp::Ordering::Equal => Self::one(),
            std::cmp::Ordering::Greater => Self::from_roots(ONE, vec![root], vec![]),
            std::cmp::Ordering::Less => Self::from_roots(ONE, vec![], vec![root]),
        }
    }

    /// `(z - a)`
    pub fn linear(a: Complex64) -> Self {
        Self::from_roots(ONE, vec![Root::simple(a)], vec![])
    }

    /// Build from factored data, merging duplicate roots and cancelling
    /// zeros against poles.
    pub fn from_roots(gain: Complex64, zeros: Vec<Root>, poles: Vec<Root>) -> Self {
        if gain == ZERO {
            return Self::zero();
        }
        let snap = |mut r: Root| {
            if r.value.norm() < SNAP_TO_ZERO {
                r.value = ZERO;
            }
            r
        };
        let mut zeros = merge_roots(zeros.into_iter().filter(|r| r.multiplicity > 0).map(snap).collect());
        let mut poles = merge_roots(poles.into_iter().filter(|r| r.multiplicity > 0).map(snap).collect());
        for z in zeros.iter_mut() {
            for p in poles.iter_mut() {
                if z.multiplicity > 0 && p.multiplicity > 0 && roots_match(z.value, p.value) {
                    let k = z.multiplicity.min(p.multiplicity);
                    z.multiplicity -= k;
                    p.multiplicity -= k;
                }
            }
        }
        zeros.retain(|r| r.multiplicity > 0);
        poles.retain(|r| r.multiplicity > 0);
        Self { gain, zeros, poles }
    }

    /// Reduced quotient of two polynomials.
    pub fn from_polys(num: &ComplexPolynomial, den: &ComplexPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(ToeplitzError::ZeroFunction);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let zeros = poly_roots(num)?;
        let poles = poly_roots(den)?;
        Ok(Self::from_roots(num.leading() / den.leading(), zeros, poles))
    }

    pub fn from_coeffs(num: &[Complex64], den: &[Complex64]) -> Result<Self> {
        Self::from_polys(
            &ComplexPolynomial::new(num.to_vec()),
            &ComplexPolynomial::new(den.to_vec()),
        )
    }

    pub fn polynomial(p: &ComplexPolynomial) -> Result<Self> {
        Self::from_polys(p, &ComplexPolynomial::constant(ONE))
    }

    pub fn is_zero(&self) -> bool {
        self.gain == ZERO
    }

    pub fn gain(&self) -> Complex64 {
        self.gain
    }

    pub fn zeros(&self) -> &[Root] {
        &self.zeros
    }

    pub fn poles(&self) -> &[Root] {
        &self.poles
    }

    pub fn numerator(&self) -> ComplexPolynomial {
        ComplexPolynomial::from_roots(self.gain, &self.zeros)
    }

    /// Monic denominator.
    pub fn denominator(&self) -> ComplexPolynomial {
        ComplexPolynomial::from_roots(ONE, &self.poles)
    }

    pub fn zero_count(&self) -> u32 {
        self.zeros.iter().map(|r| r.multiplicity).sum()
    }

    pub fn pole_count(&self) -> u32 {
        self.poles.iter().map(|r| r.multiplicity).sum()
    }

    /// `deg(numerator) - deg(denominator)`: the order of growth at infinity.
    pub fn degree_at_infinity(&self) -> i64 {
        self.zero_count() as i64 - self.pole_count() as i64
    }

    /// Multiplicity of `z = 0` as a zero (positive) or pole (negative).
    pub fn order_at_zero(&self) -> i32 {
        let z = self.zeros.iter().find(|r| r.value == ZERO).map_or(0, |r| r.multiplicity as i32);
        let p = self.poles.iter().find(|r| r.value == ZERO).map_or(0, |r| r.multiplicity as i32);
        z - p
    }

    pub fn is_constant(&self) -> bool {
        self.zeros.is_empty() && self.poles.is_empty()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut v = self.gain;
        for r in &self.zeros {
            v *= (z - r.value).powu(r.multiplicity);
        }
        for r in &self.poles {
            v /= (z - r.value).powu(r.multiplicity);
        }
        v
    }

    /// Leading coefficient ratio `lim z^{-d} r(z)` as z tends to infinity, where
    /// `d` is [`Self::degree_at_infinity`].
    pub fn value_at_infinity(&self) -> Complex64 {
        self.gain
    }

    pub fn scale(&self, c: Complex64) -> Self {
        if c == ZERO || self.is_zero() {
            return Self::zero();
        }
        Self {
            gain: self.gain * c,
            ..self.clone()
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(ToeplitzError::ZeroFunction);
        }
        Ok(Self {
            gain: ONE / self.gain,
            zeros: self.poles.clone(),
            poles: self.zeros.clone(),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn powi(&self, k: i32) -> Result<Self> {
        if k < 0 {
            return self.recip()?.powi(-k);
        }
        if self.is_zero() {
            return Ok(if k == 0 { Self::one() } else { Self::zero() });
        }
        let k = k as u32;
        let mul = |roots: &[Root]| {
            roots
                .iter()
                .map(|r| Root::new(r.value, r.multiplicity * k))
                .collect::<Vec<_>>()
        };
        Ok(Self::from_roots(
            self.gain.powu(k),
            mul(&self.zeros),
            mul(&self.poles),
        ))
    }

    /// The rational function that agrees with `conj(self(z))` on the unit circle.
    pub fn circle_conjugate(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut gain = self.gain.conj();
        let mut zeros = Vec::new();
        let mut poles = Vec::new();
        for r in &self.zeros {
            if r.value == ZERO {
                poles.push(*r);
            } else {
                let a = r.value.conj();
                gain *= (-a).powu(r.multiplicity);
                zeros.push(Root::new(ONE / a, r.multiplicity));
                poles.push(Root::new(ZERO, r.multiplicity));
            }
        }
        for r in &self.poles {
            if r.value == ZERO {
                zeros.push(*r);
            } else {
                let b = r.value.conj();
                gain /= (-b).powu(r.multiplicity);
                poles.push(Root::new(ONE / b, r.multiplicity));
                zeros.push(Root::new(ZERO, r.multiplicity));
            }
        }
        Self::from_roots(gain, zeros, poles)
    }

    fn count_where(roots: &[Root], loc: Location) -> u32 {
        roots
            .iter()
            .filter(|r| locate(r.value) == loc)
            .map(|r| r.multiplicity)
            .sum()
    }

    pub fn zeros_at(&self, loc: Location) -> u32 {
        Self::count_where(&self.zeros, loc)
    }

    pub fn poles_at(&self, loc: Location) -> u32 {
        Self::count_where(&self.poles, loc)
    }

    pub fn first_zero_at(&self, loc: Location) -> Option<Complex64> {
        self.zeros.iter().map(|r| r.value).find(|v| locate(*v) == loc)
    }

    pub fn first_pole_at(&self, loc: Location) -> Option<Complex64> {
        self.poles.iter().map(|r| r.value).find(|v| locate(*v) == loc)
    }

    /// First pole in the closed unit disc, if any.
    pub fn pole_in_closed_disc(&self) -> Option<Complex64> {
        self.first_pole_at(Location::Inside)
            .or_else(|| self.first_pole_at(Location::OnCircle))
    }

    /// Analytic on a neighbourhood of the closed disc, hence in H^2 (and H^inf).
    pub fn is_in_h2(&self) -> bool {
        self.pole_in_closed_disc().is_none()
    }

    pub fn has_circle_pole(&self) -> bool {
        self.first_pole_at(Location::OnCircle).is_some()
    }

    pub fn has_circle_zero_or_pole(&self) -> bool {
        self.first_zero_at(Location::OnCircle).is_some() || self.has_circle_pole()
    }

    /// Roots lying just outside the circle band.
    pub fn near_band_roots(&self) -> Vec<Complex64> {
        self.zeros
            .iter()
            .chain(self.poles.iter())
            .map(|r| r.value)
            .filter(|v| near_band(*v))
            .collect()
    }

    /// Taylor coefficients at 0, indices `0..n`.
    pub fn taylor_coefficients(&self, n: usize) -> Result<Vec<Complex64>> {
        if self.is_zero() {
            return Ok(vec![ZERO; n]);
        }
        self.numerator().series_div(&self.denominator(), n)
    }

    /// Substitute `z = (a s + b) / (c s + d)` and return the reduced result in `s`.
    pub fn compose_mobius(&self, a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut gain = self.gain;
        let mut zeros = Vec::new();
        let mut poles = Vec::new();
        let mut excess: i64 = 0;
        let factor = |r: &Root, gain: &mut Complex64, into: &mut Vec<Root>, sign: i32| {
            // z - r = ((a - r c) s + (b - r d)) / (c s + d)
            let lead = a - r.value * c;
            let cst = b - r.value * d;
            if lead.norm() <= 1e-14 * (cst.norm() + lead.norm()) {
                *gain *= cst.powi(sign * r.multiplicity as i32);
            } else {
                *gain *= lead.powi(sign * r.multiplicity as i32);
                into.push(Root::new(-cst / lead, r.multiplicity));
            }
        };
        for r in &self.zeros {
            factor(r, &mut gain, &mut zeros, 1);
            excess += r.multiplicity as i64;
        }
        for r in &self.poles {
            factor(r, &mut gain, &mut poles, -1);
            excess -= r.multiplicity as i64;
        }
        // divide by (c s + d)^excess
        if c == ZERO {
            gain /= d.powi(excess as i32);
        } else {
            gain /= c.powi(excess as i32);
            let shift = Root::new(-d / c, excess.unsigned_abs() as u32);
            if excess > 0 {
                poles.push(shift);
            } else if excess < 0 {
                zeros.push(shift);
            }
        }
        Self::from_roots(gain, zeros, poles)
    }

    /// Structural comparison: gains and root multisets within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let same_roots = |a: &[Root], b: &[Root]| {
            a.len() == b.len()
                && a.iter().all(|r| {
                    b.iter().any(|s| {
                        s.multiplicity == r.multiplicity
                            && (s.value - r.value).norm() <= tol * 1f64.max(r.value.norm())
                    })
                })
        };
        (self.gain - other.gain).norm() <= tol * 1f64.max(self.gain.norm())
            && same_roots(&self.zeros, &other.zeros)
            && same_roots(&self.poles, &other.poles)
    }

    /// Largest relative discrepancy against `other` on `n` circle points.
    pub fn circle_distance(&self, other: &Self, n: usize) -> f64 {
        circle_points(n)
            .into_iter()
            .map(|z| {
                let (a, b) = (self.eval(z), other.eval(z));
                (a - b).norm() / (1.0 + a.norm().max(b.norm()))
            })
            .fold(0.0, f64::max)
    }
}

fn lcm_roots(a: &[Root], b: &[Root]) -> Vec<Root> {
    let mut out: Vec<Root> = a.to_vec();
    for r in b {
        match out.iter_mut().find(|o| roots_match(o.value, r.value)) {
            Some(o) => o.multiplicity = o.multiplicity.max(r.multiplicity),
            None => out.push(*r),
        }
    }
    out
}

fn cofactor(full: &[Root], part: &[Root]) -> Vec<Root> {
    full.iter()
        .map(|r| {
            let used = part
                .iter()
                .find(|p| roots_match(p.value, r.value))
                .map_or(0, |p| p.multiplicity);
            Root::new(r.value, r.multiplicity - used)
        })
        .filter(|r| r.multiplicity > 0)
        .collect()
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let den = lcm_roots(&self.poles, &rhs.poles);
        let left = &self.numerator() * &ComplexPolynomial::from_roots(ONE, &cofactor(&den, &self.poles));
        let right = &rhs.numerator() * &ComplexPolynomial::from_roots(ONE, &cofactor(&den, &rhs.poles));
        let sum = &left + &right;
        let scale = left.max_abs_coeff() + right.max_abs_coeff();
        if sum.max_abs_coeff() <= 1e-14 * scale {
            return RationalFunction::zero();
        }
        // drop coefficients that are pure cancellation noise
        let sum = ComplexPolynomial::new(
            sum.coeffs()
                .iter()
                .map(|c| if c.norm() <= 1e-15 * scale { ZERO } else { *c })
                .collect(),
        );
        let zeros = poly_roots(&sum).expect("nonzero polynomial");
        RationalFunction::from_roots(sum.leading(), zeros, den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.scale(-ONE)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let zeros = self.zeros.iter().chain(rhs.zeros.iter()).copied().collect();
        let poles = self.poles.iter().chain(rhs.poles.iter()).copied().collect();
        RationalFunction::from_roots(self.gain * rhs.gain, zeros, poles)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: Self) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator();
        let num_s = print::format_polynomial(num.coeffs());
        if self.poles.is_empty() || self.is_zero() {
            return f.write_str(&num_s);
        }
        let den = self.denominator();
        let den_s = print::format_polynomial(den.coeffs());
        let num_part = if print::is_atomic(&num_s) {
            num_s
        } else {
            format!("({num_s})")
        };
        if print::is_atomic(&den_s) {
            write!(f, "{num_part}/{den_s}")
        } else {
            write!(f, "{num_part}/({den_s})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rf(num: &[f64], den: &[f64]) -> RationalFunction {
        RationalFunction::from_polys(
            &ComplexPolynomial::from_real(num),
            &ComplexPolynomial::from_real(den),
        )
        .unwrap()
    }

    #[test]
    fn conjugate_of_z_is_reciprocal() {
        let r = RationalFunction::z().circle_conjugate();
        assert!(r.approx_eq(&RationalFunction::z_power(-1), 1e-15));
    }

    #[test]
    fn conjugate_of_affine() {
        // 1 + z/2 -> (2z + 1)/(2z)
        let r = rf(&[1.0, 0.5], &[1.0]).circle_conjugate();
        let expected = rf(&[1.0, 2.0], &[0.0, 2.0]);
        assert!(r.approx_eq(&expected, 1e-14), "{r}");
        for z in circle_points(64) {
            let lhs = r.eval(z);
            let rhs = (c(1.0, 0.0) + z * 0.5).conj();
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn conjugate_of_constant() {
        let r = RationalFunction::constant(c(0.0, 1.0)).circle_conjugate();
        assert_eq!(r, RationalFunction::constant(c(0.0, -1.0)));
    }

    #[test]
    fn reduction_cancels_common_roots() {
        // (z^2 - 1/4)/(z - 1/2) = z + 1/2
        let r = rf(&[-0.25, 0.0, 1.0], &[-0.5, 1.0]);
        assert!(r.approx_eq(&RationalFunction::linear(c(-0.5, 0.0)), 1e-12), "{r}");
    }

    #[test]
    fn boundary_cancellation_yields_clean_monomial() {
        // zbar * conj(p) / p with p = 1 - z reduces to -z^-2
        let p = rf(&[1.0, -1.0], &[1.0]);
        let v = RationalFunction::z_power(-1) * p.circle_conjugate() * p.recip().unwrap();
        assert!(v.approx_eq(&RationalFunction::z_power(-2).scale(c(-1.0, 0.0)), 1e-14), "{v}");
    }

    #[test]
    fn sums_and_differences() {
        let a = rf(&[1.0], &[1.0, -0.5]);
        let b = rf(&[0.5], &[1.0]);
        let s = &a - &b;
        for z in circle_points(16) {
            assert!((s.eval(z) - (a.eval(z) - b.eval(z))).norm() < 1e-13);
        }
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn mobius_composition() {
        let r = rf(&[0.3, -1.0, 2.0], &[1.0, 0.25]);
        let (a, b, cc, d) = (c(0.0, -1.0), c(0.0, 1.0), c(1.0, 0.0), c(1.0, 0.0));
        let composed = r.compose_mobius(a, b, cc, d);
        for s in [c(0.3, 0.2), c(-2.0, 1.0), c(5.0, -0.5)] {
            let z = (a * s + b) / (cc * s + d);
            assert!((composed.eval(s) - r.eval(z)).norm() < 1e-11 * (1.0 + r.eval(z).norm()));
        }
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(rf(&[0.5, 1.0], &[2.0, 1.0]).to_string(), "(0.5+z)/(2+z)");
        assert_eq!(RationalFunction::z_power(-2).to_string(), "1/z^2");
        assert_eq!(rf(&[1.0, 0.5], &[1.0]).to_string(), "1+0.5*z");
    }
}
