//! Cayley-transform bridge between the upper half-plane and the disc.
//!
//! The map `s = i(1 - z)/(1 + z)` carries the disc onto the upper
//! half-plane. Vectors move by the weighted isometry `V2`, symbols and
//! multipliers by plain composition, and every half-plane question is
//! answered by the disc engine on the transferred data.

use num_complex::Complex64;

use crate::error::{Result, ToeplitzError};
use crate::kernels::{is_maximal, MaximalityCertificate};
use crate::multipliers::is_multiplier;
use crate::rational::RationalFunction;
use crate::symbol::ToeplitzSymbol;
use crate::tolerance::EPS_CIRCLE;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const MINUS_ONE: Complex64 = Complex64::new(-1.0, 0.0);

/// A rational function of the half-plane variable `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfPlaneRational {
    value: RationalFunction,
}

impl HalfPlaneRational {
    pub fn new(value: RationalFunction) -> Self {
        Self { value }
    }

    pub fn value(&self) -> &RationalFunction {
        &self.value
    }

    pub fn eval(&self, s: Complex64) -> Complex64 {
        self.value.eval(s)
    }

    pub fn real_pole(&self) -> Option<Complex64> {
        self.value
            .poles()
            .iter()
            .map(|r| r.value)
            .find(|p| p.im.abs() <= EPS_CIRCLE * p.norm().max(1.0))
    }

    /// No real poles and strict decay at infinity.
    pub fn is_square_integrable(&self) -> bool {
        self.value.is_zero() || (self.real_pole().is_none() && self.value.degree_at_infinity() < 0)
    }

    /// Square-integrable on the line with every pole in the open lower half-plane.
    pub fn is_in_h2(&self) -> bool {
        self.is_square_integrable() && self.value.poles().iter().all(|r| r.value.im < 0.0)
    }

    pub fn is_bounded_on_line(&self) -> bool {
        self.value.is_zero() || (self.real_pole().is_none() && self.value.degree_at_infinity() <= 0)
    }
}

/// `f(i(1 - z)/(1 + z))` with no weight.
fn compose_to_disc(f: &RationalFunction) -> RationalFunction {
    f.compose_mobius(-I, I, ONE, ONE)
}

/// `V2 f(z) = 2 sqrt(pi) (1 + z)^{-1} f(i(1 - z)/(1 + z))`, an isometry from
/// `L^2(R)` onto `L^2` of the circle with normalized arc length.
pub fn cayley_function(f: &HalfPlaneRational) -> Result<RationalFunction> {
    if f.value.is_zero() {
        return Ok(RationalFunction::zero());
    }
    if let Some(p) = f.real_pole() {
        return Err(ToeplitzError::NotSquareIntegrable(format!("real pole at {p}")));
    }
    if f.value.degree_at_infinity() >= 0 {
        return Err(ToeplitzError::NotSquareIntegrable(
            "no decay at infinity".into(),
        ));
    }
    let weight = RationalFunction::linear(MINUS_ONE)
        .recip()?
        .scale(Complex64::new(2.0 * std::f64::consts::PI.sqrt(), 0.0));
    Ok(&weight * &compose_to_disc(&f.value))
}

/// Inverse of [`cayley_function`].
pub fn inverse_cayley_function(v: &RationalFunction) -> HalfPlaneRational {
    // 1 + z = 2i/(i + s) and (2 sqrt(pi))^{-1} restores the isometry
    let weight = RationalFunction::linear(-I)
        .recip()
        .expect("nonzero")
        .scale(I / std::f64::consts::PI.sqrt());
    HalfPlaneRational::new(&weight * &cayley_symbol_inverse(v))
}

/// `g(i(1 - z)/(1 + z))` for a symbol bounded on the line.
pub fn cayley_symbol(g: &HalfPlaneRational) -> Result<ToeplitzSymbol> {
    if !g.is_bounded_on_line() {
        return Err(ToeplitzError::UnboundedSymbol(g.value.to_string()));
    }
    ToeplitzSymbol::new(compose_to_disc(&g.value))
}

/// `phi((i - s)/(i + s))`, pulling a disc function back to the half-plane.
pub fn cayley_symbol_inverse(phi: &RationalFunction) -> RationalFunction {
    phi.compose_mobius(MINUS_ONE, I, ONE, I)
}

/// Multipliers need not be bounded, so they move by bare composition.
pub fn transfer_multiplier(w: &HalfPlaneRational) -> RationalFunction {
    compose_to_disc(&w.value)
}

/// Whether `w` multiplies `ker T_g` into `ker T_h` on the half-plane, decided
/// on the disc after transfer.
pub fn halfplane_multiplier_test(
    w: &HalfPlaneRational,
    g: &HalfPlaneRational,
    h: &HalfPlaneRational,
) -> Result<bool> {
    is_multiplier(&transfer_multiplier(w), &cayley_symbol(g)?, &cayley_symbol(h)?)
}

/// Maximality of `k` in the half-plane kernel of `g`, decided on the disc.
pub fn halfplane_is_maximal(
    k: &HalfPlaneRational,
    g: &HalfPlaneRational,
) -> Result<MaximalityCertificate> {
    is_maximal(&cayley_function(k)?, &cayley_symbol(g)?)
}
