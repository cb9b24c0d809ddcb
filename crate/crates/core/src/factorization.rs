//! Inner-outer factorization of rational H^2 functions and Wiener-Hopf
//! factorization of circle-invertible rational symbols.

use num_complex::Complex64;

use crate::error::{Result, ToeplitzError};
use crate::rational::RationalFunction;
use crate::roots::{merge_roots, Root};
use crate::symbol::ToeplitzSymbol;
use crate::tolerance::{circle_points, locate, roots_match, Location, CIRCLE_SAMPLES};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Finite Blaschke product `constant * prod ((z - a)/(1 - conj(a) z))^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlaschkeProduct {
    constant: Complex64,
    zeros: Vec<Root>,
}

impl BlaschkeProduct {
    pub fn new(constant: Complex64, zeros: Vec<Root>) -> Result<Self> {
        if (constant.norm() - 1.0).abs() > 1e-12 {
            return Err(ToeplitzError::PreconditionViolation(format!(
                "Blaschke constant {constant} is not unimodular"
            )));
        }
        if let Some(r) = zeros.iter().find(|r| locate(r.value) != Location::Inside) {
            return Err(ToeplitzError::PreconditionViolation(format!(
                "Blaschke zero {} is not in the open unit disc",
                r.value
            )));
        }
        Ok(Self {
            constant,
            zeros: merge_roots(zeros),
        })
    }

    pub fn from_zeros(zeros: Vec<Root>) -> Result<Self> {
        Self::new(ONE, zeros)
    }

    pub fn identity() -> Self {
        Self {
            constant: ONE,
            zeros: Vec::new(),
        }
    }

    /// `z^n`
    pub fn z_power(n: u32) -> Self {
        if n == 0 {
            return Self::identity();
        }
        Self {
            constant: ONE,
            zeros: vec![Root::new(ZERO, n)],
        }
    }

    pub fn constant(&self) -> Complex64 {
        self.constant
    }

    pub fn zeros(&self) -> &[Root] {
        &self.zeros
    }

    pub fn degree(&self) -> u32 {
        self.zeros.iter().map(|r| r.multiplicity).sum()
    }

    pub fn with_constant(&self, constant: Complex64) -> Result<Self> {
        Self::new(constant, self.zeros.clone())
    }

    pub fn to_rational(&self) -> RationalFunction {
        let mut gain = self.constant;
        let mut poles = Vec::new();
        for r in &self.zeros {
            if r.value != ZERO {
                let a = r.value.conj();
                // 1 - conj(a) z = -conj(a) (z - 1/conj(a))
                gain /= (-a).powu(r.multiplicity);
                poles.push(Root::new(ONE / a, r.multiplicity));
            }
        }
        RationalFunction::from_roots(gain, self.zeros.clone(), poles)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.zeros.iter().fold(self.constant, |acc, r| {
            acc * ((z - r.value) / (ONE - r.value.conj() * z)).powu(r.multiplicity)
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            constant: self.constant * other.constant,
            zeros: merge_roots(self.zeros.iter().chain(other.zeros.iter()).copied().collect()),
        }
    }

    /// Recognise a rational function as a finite Blaschke product: zeros in
    /// the open disc, poles exactly at their reflections, unimodular on the circle.
    pub fn from_rational(r: &RationalFunction) -> Option<Self> {
        if r.is_zero() || r.zeros().iter().any(|z| locate(z.value) != Location::Inside) {
            return None;
        }
        let mut expected: Vec<Root> = r
            .zeros()
            .iter()
            .filter(|z| z.value != ZERO)
            .map(|z| Root::new(ONE / z.value.conj(), z.multiplicity))
            .collect();
        expected = merge_roots(expected);
        let poles = r.poles();
        if poles.len() != expected.len()
            || !poles.iter().all(|p| {
                expected
                    .iter()
                    .any(|e| e.multiplicity == p.multiplicity && roots_match(e.value, p.value))
            })
        {
            return None;
        }
        let mut constant = r.gain();
        for z in r.zeros() {
            if z.value != ZERO {
                constant *= (-z.value.conj()).powu(z.multiplicity);
            }
        }
        if (constant.norm() - 1.0).abs() > 1e-9 {
            return None;
        }
        let unimodular = circle_points(CIRCLE_SAMPLES)
            .into_iter()
            .all(|z| (r.eval(z).norm() - 1.0).abs() < 1e-9);
        if !unimodular {
            return None;
        }
        Some(Self {
            constant: constant / constant.norm(),
            zeros: r.zeros().to_vec(),
        })
    }
}

/// `f = inner * outer` with `inner` a Blaschke product of constant 1.
#[derive(Clone, Debug, PartialEq)]
pub struct InnerOuterFactorization {
    pub inner: BlaschkeProduct,
    pub outer: RationalFunction,
}

pub fn inner_outer(f: &RationalFunction) -> Result<InnerOuterFactorization> {
    if f.is_zero() {
        return Err(ToeplitzError::ZeroFunction);
    }
    if let Some(p) = f.pole_in_closed_disc() {
        return Err(ToeplitzError::NotInHardySpace(p.to_string()));
    }
    let mut gain = f.gain();
    let mut inner_zeros = Vec::new();
    let mut outer_zeros = Vec::new();
    for r in f.zeros() {
        if locate(r.value) == Location::Inside {
            inner_zeros.push(*r);
            if r.value != ZERO {
                // (z - a) = B_a(z) * (1 - conj(a) z) = B_a(z) * (-conj(a)) (z - 1/conj(a))
                let a = r.value.conj();
                gain *= (-a).powu(r.multiplicity);
                outer_zeros.push(Root::new(ONE / a, r.multiplicity));
            }
        } else {
            outer_zeros.push(*r);
        }
    }
    Ok(InnerOuterFactorization {
        inner: BlaschkeProduct::from_zeros(inner_zeros)?,
        outer: RationalFunction::from_roots(gain, outer_zeros, f.poles().to_vec()),
    })
}

/// `symbol = minus * z^index * plus^{-1}` with `plus(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct WienerHopfFactorization {
    pub minus: RationalFunction,
    pub index: i32,
    pub plus: RationalFunction,
}

impl WienerHopfFactorization {
    pub fn reconstruct(&self) -> RationalFunction {
        &(&self.minus * &RationalFunction::z_power(self.index))
            * &self.plus.recip().expect("plus factor is invertible")
    }
}

pub fn wiener_hopf(s: &ToeplitzSymbol) -> Result<WienerHopfFactorization> {
    let index = s.require_invertible()?;
    let value = s.value();
    let mut constant = value.gain();
    let mut minus_zeros = Vec::new();
    let mut minus_poles = Vec::new();
    let mut plus_zeros = Vec::new();
    let mut plus_poles = Vec::new();
    let mut minus_z_order: i64 = 0;
    for (roots, sign) in [(value.zeros(), 1i32), (value.poles(), -1i32)] {
        for r in roots {
            let m = r.multiplicity;
            if r.value == ZERO {
                continue;
            }
            match locate(r.value) {
                Location::Inside => {
                    // z - a = z (1 - a/z) = (z - a) z^{-1} * z; the z goes to the index
                    if sign > 0 {
                        minus_zeros.push(*r);
                        minus_z_order -= m as i64;
                    } else {
                        minus_poles.push(*r);
                        minus_z_order += m as i64;
                    }
                }
                Location::Outside => {
                    // z - a = -a (1 - z/a); plus^{-1} carries (1 - z/a)
                    constant *= (-r.value).powi(sign * m as i32);
                    if sign > 0 {
                        plus_poles.push(*r);
                    } else {
                        plus_zeros.push(*r);
                    }
                }
                Location::OnCircle => unreachable!("invertible symbol"),
            }
        }
    }
    let z_root = Root::new(ZERO, minus_z_order.unsigned_abs() as u32);
    if minus_z_order > 0 {
        minus_zeros.push(z_root);
    } else if minus_z_order < 0 {
        minus_poles.push(z_root);
    }
    let minus = RationalFunction::from_roots(constant, minus_zeros, minus_poles);
    // plus = prod(1 - z/b) / prod(1 - z/a), normalised at 0
    let mut plus_gain = ONE;
    for r in &plus_zeros {
        plus_gain *= (-ONE / r.value).powu(r.multiplicity);
    }
    for r in &plus_poles {
        plus_gain /= (-ONE / r.value).powu(r.multiplicity);
    }
    let plus = RationalFunction::from_roots(plus_gain, plus_zeros, plus_poles);
    Ok(WienerHopfFactorization { minus, index, plus })
}

/// `alpha` divides `theta`: every zero of `alpha` is a zero of `theta` with
/// at least the same multiplicity.
pub fn blaschke_divides(alpha: &BlaschkeProduct, theta: &BlaschkeProduct) -> bool {
    alpha.zeros().iter().all(|a| {
        theta
            .zeros()
            .iter()
            .any(|t| roots_match(a.value, t.value) && t.multiplicity >= a.multiplicity)
    })
}
