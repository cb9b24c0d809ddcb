//! Multipliers between Toeplitz kernels.
//!
//! A rational `w` multiplies `ker T_g` into `ker T_h` when `w ker T_g` lies in
//! L^2 of the circle (a pole check at rational scale) and `w k` lands in
//! `ker T_h` for one maximal vector `k`. The same answer is reachable through
//! the Smirnov-class condition on `h w / g`; both routes are registered below.

use num_complex::Complex64;

use crate::error::{Result, ToeplitzError};
use crate::factorization::BlaschkeProduct;
use crate::kernels::{admissible_quotient, equals, in_kernel, is_maximal, kernel, minimal_kernel, ToeplitzKernel};
use crate::rational::RationalFunction;
use crate::symbol::ToeplitzSymbol;
use crate::tolerance::Location;

/// `w b` is square-integrable on the circle for every basis element `b`.
pub fn carleson_check(w: &RationalFunction, k: &ToeplitzKernel) -> bool {
    k.basis().iter().all(|b| !(w * b).has_circle_pole())
}

/// One way of deciding whether `w` multiplies `ker T_g` into `ker T_h`.
pub trait MultiplierRoute: Send + Sync {
    fn name(&self) -> &'static str;
    fn decide(
        &self,
        w: &RationalFunction,
        g: &ToeplitzSymbol,
        h: &ToeplitzSymbol,
    ) -> Result<bool>;
}

/// Tests `w k_max` against `ker T_h` for the top ladder vector `k_max`.
pub struct MaximalVectorRoute;

/// Tests that `conj(h w / g)` has no poles in the open disc.
pub struct SmirnovRoute;

struct Prepared {
    source: ToeplitzKernel,
}

fn prepare(w: &RationalFunction, g: &ToeplitzSymbol, h: &ToeplitzSymbol) -> Result<Option<Prepared>> {
    g.require_invertible()?;
    h.require_invertible()?;
    let source = kernel(g)?;
    if source.is_trivial() || kernel(h)?.is_trivial() {
        return Err(ToeplitzError::TrivialKernel);
    }
    // the outer basis element rules out poles of w in the open disc
    if w.first_pole_at(Location::Inside).is_some() || !carleson_check(w, &source) {
        return Ok(None);
    }
    Ok(Some(Prepared { source }))
}

impl MultiplierRoute for MaximalVectorRoute {
    fn name(&self) -> &'static str {
        "maximal-vector"
    }

    fn decide(&self, w: &RationalFunction, g: &ToeplitzSymbol, h: &ToeplitzSymbol) -> Result<bool> {
        let Some(prep) = prepare(w, g, h)? else {
            return Ok(false);
        };
        let k_max = prep.source.maximal_vector().expect("nontrivial kernel");
        Ok(in_kernel(&(w * k_max), h))
    }
}

impl MultiplierRoute for SmirnovRoute {
    fn name(&self) -> &'static str {
        "smirnov"
    }

    fn decide(&self, w: &RationalFunction, g: &ToeplitzSymbol, h: &ToeplitzSymbol) -> Result<bool> {
        if prepare(w, g, h)?.is_none() {
            return Ok(false);
        }
        let q = (&(h.value() * w) * &g.value().recip()?).circle_conjugate();
        Ok(q.first_pole_at(Location::Inside).is_none())
    }
}

/// Multiplier routes addressable by name.
pub struct RouteRegistry {
    routes: Vec<Box<dyn MultiplierRoute>>,
}

impl RouteRegistry {
    pub fn empty() -> Self {
        Self { routes: Vec::new() }
    }

    pub fn register(&mut self, route: Box<dyn MultiplierRoute>) {
        self.routes.retain(|r| r.name() != route.name());
        self.routes.push(route);
    }

    pub fn get(&self, name: &str) -> Option<&dyn MultiplierRoute> {
        self.routes.iter().find(|r| r.name() == name).map(|r| r.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.routes.iter().map(|r| r.name()).collect()
    }

    pub fn routes(&self) -> impl Iterator<Item = &dyn MultiplierRoute> {
        self.routes.iter().map(|r| r.as_ref())
    }
}

impl Default for RouteRegistry {
    fn default() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(MaximalVectorRoute));
        reg.register(Box::new(SmirnovRoute));
        reg
    }
}

pub const DEFAULT_ROUTE: &str = "maximal-vector";

/// `w` multiplies `ker T_g` into `ker T_h`, decided on the default route.
pub fn is_multiplier(w: &RationalFunction, g: &ToeplitzSymbol, h: &ToeplitzSymbol) -> Result<bool> {
    MaximalVectorRoute.decide(w, g, h)
}

/// As [`is_multiplier`] but testing a caller-chosen maximal vector `k` of `ker T_g`.
pub fn is_multiplier_via(
    w: &RationalFunction,
    k: &RationalFunction,
    g: &ToeplitzSymbol,
    h: &ToeplitzSymbol,
) -> Result<bool> {
    if !is_maximal(k, g)?.is_maximal {
        return Err(ToeplitzError::PreconditionViolation(
            "test vector is not maximal for ker T_g".into(),
        ));
    }
    let Some(_) = prepare(w, g, h)? else {
        return Ok(false);
    };
    Ok(in_kernel(&(w * k), h))
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultiplierSpace {
    pub source: ToeplitzSymbol,
    pub target: ToeplitzSymbol,
    /// `z^{-1} h / g`, reduced.
    pub test_symbol: ToeplitzSymbol,
    pub space: ToeplitzKernel,
    pub carleson_filtered: bool,
    /// Set by [`multiplier_space_bounded`]: every basis element is analytic on the closed disc.
    pub bounded: Option<bool>,
}

/// `C(ker T_g) ∩ ker T_{zbar h/g}`, the square-integrable multipliers.
pub fn multiplier_space(g: &ToeplitzSymbol, h: &ToeplitzSymbol) -> Result<MultiplierSpace> {
    g.require_invertible()?;
    h.require_invertible()?;
    let q = admissible_quotient(g, h)?;
    let test_symbol = ToeplitzSymbol::new(&RationalFunction::z_power(-1) * &q)?;
    let space = kernel(&test_symbol)?;
    let source = kernel(g)?;
    if space.basis().iter().any(|b| !carleson_check(b, &source)) {
        return Err(ToeplitzError::CarlesonFailure);
    }
    Ok(MultiplierSpace {
        source: g.clone(),
        target: h.clone(),
        test_symbol,
        space,
        carleson_filtered: true,
        bounded: None,
    })
}

/// [`multiplier_space`] with each basis element re-verified to be bounded.
pub fn multiplier_space_bounded(g: &ToeplitzSymbol, h: &ToeplitzSymbol) -> Result<MultiplierSpace> {
    let mut m = multiplier_space(g, h)?;
    let bounded = m.space.basis().iter().all(|b| b.pole_in_closed_disc().is_none());
    m.bounded = Some(bounded);
    Ok(m)
}

/// `w ker T_g` when it is itself a Toeplitz kernel.
pub fn image_kernel(w: &RationalFunction, g: &ToeplitzSymbol) -> Result<Option<ToeplitzKernel>> {
    if w.is_zero() {
        return Err(ToeplitzError::ZeroFunction);
    }
    let source = kernel(g)?;
    if !carleson_check(w, &source) {
        return Err(ToeplitzError::CarlesonFailure);
    }
    let Some(k_max) = source.maximal_vector() else {
        return Ok(Some(source));
    };
    let (_, candidate) = minimal_kernel(&(w * k_max))?;
    let fits = candidate.dimension() == source.dimension()
        && source.basis().iter().all(|b| candidate.contains(&(w * b)));
    Ok(fits.then_some(candidate))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SurjectivityReport {
    pub multiplier: RationalFunction,
    pub holds: bool,
    pub outer_ok: bool,
    pub carleson_forward_ok: bool,
    pub carleson_inverse_ok: bool,
    pub symbol_identity_ok: bool,
}

/// Decides whether `w` maps `ker T_g` onto `ker T_h`.
pub fn is_surjective_multiplier(
    w: &RationalFunction,
    g: &ToeplitzSymbol,
    h: &ToeplitzSymbol,
) -> Result<SurjectivityReport> {
    if w.is_zero() {
        return Err(ToeplitzError::ZeroFunction);
    }
    g.require_invertible()?;
    h.require_invertible()?;
    let outer_ok = is_outer(w);
    let carleson_forward_ok = carleson_check(w, &kernel(g)?);
    let carleson_inverse_ok = carleson_check(&w.recip()?, &kernel(h)?);
    let linked = ToeplitzSymbol::new(&(g.value() * &w.circle_conjugate()) * &w.recip()?)?;
    let symbol_identity_ok = match equals(h, &linked) {
        Ok(b) => b,
        Err(ToeplitzError::UndefinedQuotient(_) | ToeplitzError::NotInvertibleOnCircle) => false,
        Err(e) => return Err(e),
    };
    Ok(SurjectivityReport {
        multiplier: w.clone(),
        holds: outer_ok && carleson_forward_ok && carleson_inverse_ok && symbol_identity_ok,
        outer_ok,
        carleson_forward_ok,
        carleson_inverse_ok,
        symbol_identity_ok,
    })
}

/// Rational outer: no zeros and no poles in the open disc.
pub fn is_outer(w: &RationalFunction) -> bool {
    !w.is_zero()
        && w.first_zero_at(Location::Inside).is_none()
        && w.first_pole_at(Location::Inside).is_none()
}

/// `theta w / conj(w) = alpha * companion` with `companion` of constant 1.
#[derive(Clone, Debug, PartialEq)]
pub struct CrofootCompanion {
    pub companion: BlaschkeProduct,
    pub alpha: Complex64,
}

pub fn crofoot_companion(theta: &BlaschkeProduct, w: &RationalFunction) -> Result<Option<CrofootCompanion>> {
    if w.is_zero() {
        return Err(ToeplitzError::ZeroFunction);
    }
    if !is_outer(w) {
        return Err(ToeplitzError::NotOuter(w.to_string()));
    }
    let phi = &(&theta.to_rational() * w) * &w.circle_conjugate().recip()?;
    Ok(BlaschkeProduct::from_rational(&phi).map(|b| CrofootCompanion {
        alpha: b.constant(),
        companion: b.with_constant(Complex64::new(1.0, 0.0)).expect("unimodular"),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ComplexPolynomial;
    use crate::roots::Root;

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

    fn zp(k: i32) -> ToeplitzSymbol {
        ToeplitzSymbol::z_power(k)
    }

    fn sym(r: RationalFunction) -> ToeplitzSymbol {
        ToeplitzSymbol::new(r).unwrap()
    }

    fn both(w: &RationalFunction, g: &ToeplitzSymbol, h: &ToeplitzSymbol) -> bool {
        let a = MaximalVectorRoute.decide(w, g, h).unwrap();
        let b = SmirnovRoute.decide(w, g, h).unwrap();
        assert_eq!(a, b, "routes disagree on {w}");
        a
    }

    #[test]
    fn carleson_examples() {
        let k = kernel(&zp(-2)).unwrap();
        assert!(carleson_check(&rf(&[3.0, -1.0, 2.0], &[1.0]), &k));
        assert!(carleson_check(&rf(&[1.0], &[1.0, 0.4]), &k));
        assert!(!carleson_check(&rf(&[1.0], &[-1.0, 1.0]), &k));
    }

    #[test]
    fn multiplier_examples() {
        assert!(both(&rf(&[1.0, 1.0], &[1.0]), &zp(-1), &zp(-2)));
        assert!(!both(&rf(&[0.0, 0.0, 1.0], &[1.0]), &zp(-1), &zp(-2)));
        assert!(!both(&rf(&[1.0], &[1.0, 0.5]), &zp(-2), &zp(-2)));
        assert!(!both(&RationalFunction::z_power(-1), &zp(-2), &zp(-2)));
    }

    #[test]
    fn trivial_kernel_is_an_error() {
        assert_eq!(
            is_multiplier(&RationalFunction::one(), &zp(1), &zp(-1)),
            Err(ToeplitzError::TrivialKernel)
        );
    }

    #[test]
    fn registry_lookup() {
        let reg = RouteRegistry::default();
        assert_eq!(reg.names(), vec!["maximal-vector", "smirnov"]);
        assert!(reg.get("smirnov").is_some());
        assert!(reg.get("nope").is_none());
    }

    #[test]
    fn user_supplied_maximal_vector() {
        let k = rf(&[0.5, 1.0], &[1.0]);
        let w = rf(&[1.0, 1.0], &[1.0]);
        assert!(is_multiplier_via(&w, &k, &zp(-2), &zp(-3)).unwrap());
        assert!(is_multiplier_via(&w, &rf(&[1.0, 0.5], &[1.0]), &zp(-2), &zp(-3)).is_err());
    }

    #[test]
    fn power_spaces() {
        let m = multiplier_space(&zp(-1), &zp(-2)).unwrap();
        assert_eq!(m.space.dimension(), 2);
        assert!(m.test_symbol.value().approx_eq(&RationalFunction::z_power(-2), 1e-15));
        assert_eq!(multiplier_space(&zp(-2), &zp(-1)).unwrap().space.dimension(), 0);
        for n in 1..=4 {
            for mm in n..=5 {
                let s = multiplier_space(&zp(-n), &zp(-mm)).unwrap();
                assert_eq!(s.space.dimension() as i32, mm - n + 1);
            }
        }
    }

    #[test]
    fn bounded_space_for_model_spaces() {
        let theta = RationalFunction::z();
        let phi = RationalFunction::z_power(3);
        let m = multiplier_space_bounded(&sym(theta.circle_conjugate()), &sym(phi.circle_conjugate()))
            .unwrap();
        assert_eq!(m.space.dimension(), 3);
        assert_eq!(m.bounded, Some(true));
        let constants = multiplier_space_bounded(&zp(-1), &zp(-1)).unwrap();
        assert_eq!(constants.space.dimension(), 1);
    }

    #[test]
    fn image_kernel_cases() {
        let g = zp(-2);
        assert_eq!(
            image_kernel(&RationalFunction::one(), &g).unwrap().unwrap().dimension(),
            2
        );
        assert!(image_kernel(&rf(&[1.0, 1.0], &[1.0]), &zp(-1)).unwrap().is_none());
        let w = rf(&[1.0, 0.25], &[1.0, -0.5]);
        let img = image_kernel(&w, &g).unwrap().expect("invertible multiplier");
        let expected = sym(g.value() * &w.recip().unwrap());
        assert!(equals(img.symbol(), &expected).unwrap());
        assert_eq!(image_kernel(&RationalFunction::zero(), &g), Err(ToeplitzError::ZeroFunction));
        assert_eq!(
            image_kernel(&rf(&[1.0], &[1.0, -1.0]), &g),
            Err(ToeplitzError::CarlesonFailure)
        );
    }

    #[test]
    fn surjectivity_examples() {
        let w = rf(&[1.0], &[1.0, -0.5]);
        let h = rf(&[2.0, -1.0], &[-1.0, 2.0]);
        let r = is_surjective_multiplier(&w, &zp(-1), &sym(h)).unwrap();
        assert!(r.holds, "{r:?}");
        let r = is_surjective_multiplier(&rf(&[1.0, 1.0], &[1.0]), &zp(-1), &zp(-2)).unwrap();
        assert!(!r.holds);
        assert!(r.symbol_identity_ok && r.outer_ok && r.carleson_forward_ok);
        assert!(!r.carleson_inverse_ok);
        let r = is_surjective_multiplier(&RationalFunction::one(), &zp(-2), &zp(-2)).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn crofoot_examples() {
        let z = BlaschkeProduct::z_power(1);
        let w = rf(&[1.0], &[1.0, -0.5]);
        let cc = crofoot_companion(&z, &w).unwrap().unwrap();
        let expected = BlaschkeProduct::from_zeros(vec![Root::simple(c(0.5, 0.0))]).unwrap();
        assert!(cc.companion.to_rational().approx_eq(&expected.to_rational(), 1e-12));
        assert!((cc.alpha - c(1.0, 0.0)).norm() < 1e-12);

        let cc = crofoot_companion(&z, &RationalFunction::one()).unwrap().unwrap();
        assert!(cc.companion.to_rational().approx_eq(&RationalFunction::z(), 1e-14));

        let w = &rf(&[1.0], &[1.0, -0.5]) * &rf(&[1.0], &[1.0, 1.0 / 3.0]);
        let cc = crofoot_companion(&BlaschkeProduct::z_power(2), &w).unwrap().unwrap();
        let zeros: Vec<Complex64> = cc.companion.zeros().iter().map(|r| r.value).collect();
        assert_eq!(zeros.len(), 2);
        assert!(zeros.iter().any(|a| (a - c(0.5, 0.0)).norm() < 1e-12));
        assert!(zeros.iter().any(|a| (a - c(-1.0 / 3.0, 0.0)).norm() < 1e-12));

        assert!(matches!(
            crofoot_companion(&z, &rf(&[0.5, 1.0], &[1.0])),
            Err(ToeplitzError::NotOuter(_))
        ));
    }
}
