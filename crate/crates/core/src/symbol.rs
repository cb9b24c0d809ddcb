use std::fmt;

use crate::error::{Result, ToeplitzError};
use crate::rational::RationalFunction;
use crate::tolerance::Location;

/// A rational function read as a symbol on the unit circle.
///
/// `zbar` has already been rewritten as `z^-1`, so the symbol is a single
/// reduced quotient. Invertibility on the circle and the winding number are
/// computed once at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct ToeplitzSymbol {
    value: RationalFunction,
    circle_invertible: bool,
    winding: Option<i32>,
}

impl ToeplitzSymbol {
    /// Rejects the zero symbol.
    pub fn new(value: RationalFunction) -> Result<Self> {
        if value.is_zero() {
            return Err(ToeplitzError::ZeroFunction);
        }
        let circle_invertible = !value.has_circle_zero_or_pole();
        let winding = circle_invertible.then(|| {
            value.zeros_at(Location::Inside) as i32 - value.poles_at(Location::Inside) as i32
        });
        Ok(Self {
            value,
            circle_invertible,
            winding,
        })
    }

    pub fn value(&self) -> &RationalFunction {
        &self.value
    }

    pub fn into_value(self) -> RationalFunction {
        self.value
    }

    pub fn is_circle_invertible(&self) -> bool {
        self.circle_invertible
    }

    pub fn winding(&self) -> Option<i32> {
        self.winding
    }

    pub fn require_invertible(&self) -> Result<i32> {
        self.winding.ok_or(ToeplitzError::NotInvertibleOnCircle)
    }

    pub fn circle_conjugate(&self) -> Self {
        Self::new(self.value.circle_conjugate()).expect("conjugate of a nonzero symbol is nonzero")
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.value * &other.value).expect("product of nonzero symbols is nonzero")
    }

    pub fn div(&self, other: &Self) -> Self {
        Self::new(
            self.value
                .checked_div(&other.value)
                .expect("nonzero symbol has a reciprocal"),
        )
        .expect("quotient of nonzero symbols is nonzero")
    }

    pub fn mul_rational(&self, r: &RationalFunction) -> Result<Self> {
        Self::new(&self.value * r)
    }

    /// `z^k` as a symbol.
    pub fn z_power(k: i32) -> Self {
        Self::new(RationalFunction::z_power(k)).unwrap()
    }
}

impl fmt::Display for ToeplitzSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// Zeros inside minus poles inside the unit disc, with multiplicity.
pub fn winding_number(s: &ToeplitzSymbol) -> Result<i32> {
    s.require_invertible()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ComplexPolynomial;
    use num_complex::Complex64;

    fn rf(num: &[f64], den: &[f64]) -> RationalFunction {
        RationalFunction::from_polys(
            &ComplexPolynomial::from_real(num),
            &ComplexPolynomial::from_real(den),
        )
        .unwrap()
    }

    #[test]
    fn monomial_winding() {
        assert_eq!(winding_number(&ToeplitzSymbol::z_power(-2)), Ok(-2));
    }

    #[test]
    fn blaschke_factor_winds_once() {
        let s = ToeplitzSymbol::new(rf(&[0.5, 1.0], &[1.0, 0.5])).unwrap();
        assert_eq!(winding_number(&s), Ok(1));
    }

    #[test]
    fn mixed_symbol_winding() {
        // (2z + 1)/(z^4 (2 + z))
        let s = ToeplitzSymbol::new(rf(&[1.0, 2.0], &[0.0, 0.0, 0.0, 0.0, 2.0, 1.0])).unwrap();
        assert_eq!(winding_number(&s), Ok(-3));
    }

    #[test]
    fn circle_zero_is_not_invertible() {
        let s = ToeplitzSymbol::new(rf(&[1.0, -1.0], &[1.0])).unwrap();
        assert!(!s.is_circle_invertible());
        assert_eq!(winding_number(&s), Err(ToeplitzError::NotInvertibleOnCircle));
    }

    #[test]
    fn zero_symbol_is_rejected() {
        assert_eq!(
            ToeplitzSymbol::new(RationalFunction::constant(Complex64::new(0.0, 0.0))),
            Err(ToeplitzError::ZeroFunction)
        );
    }
}
