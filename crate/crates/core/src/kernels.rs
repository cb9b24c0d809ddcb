//! Explicit Toeplitz kernels and the relations between them.
//!
//! All decisions here are symbolic: membership, maximality, inclusion and
//! equality reduce to locating zeros and poles of rational functions
//! relative to the unit circle.

use num_complex::Complex64;

use crate::error::{Result, ToeplitzError};
use crate::factorization::{inner_outer, wiener_hopf, BlaschkeProduct};
use crate::rational::RationalFunction;
use crate::symbol::ToeplitzSymbol;
use crate::tolerance::Location;

/// `ker T_symbol` with the ladder basis `plus * z^j`, `j = 0..dimension`.
#[derive(Clone, Debug, PartialEq)]
pub struct ToeplitzKernel {
    symbol: ToeplitzSymbol,
    dimension: usize,
    basis: Vec<RationalFunction>,
}

impl ToeplitzKernel {
    pub fn symbol(&self) -> &ToeplitzSymbol {
        &self.symbol
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn basis(&self) -> &[RationalFunction] {
        &self.basis
    }

    pub fn is_trivial(&self) -> bool {
        self.dimension == 0
    }

    /// The top ladder element `plus * z^(dim - 1)`, a maximal vector.
    pub fn maximal_vector(&self) -> Option<&RationalFunction> {
        self.basis.last()
    }

    pub fn contains(&self, k: &RationalFunction) -> bool {
        in_kernel(k, &self.symbol)
    }
}

/// Symbolic membership `k in ker T_s`: `k` is in H^2 and
/// `conj(z s k)` is in H^2, i.e. `s k` lies in the conjugate of `z H^2`.
pub fn in_kernel(k: &RationalFunction, s: &ToeplitzSymbol) -> bool {
    if k.is_zero() {
        return true;
    }
    k.is_in_h2() && certificate(k, s).is_in_h2()
}

fn certificate(k: &RationalFunction, s: &ToeplitzSymbol) -> RationalFunction {
    (&(&RationalFunction::z() * s.value()) * k).circle_conjugate()
}

pub fn kernel(s: &ToeplitzSymbol) -> Result<ToeplitzKernel> {
    let wh = wiener_hopf(s)?;
    let dimension = (-wh.index).max(0) as usize;
    let basis = (0..dimension as i32)
        .map(|j| &wh.plus * &RationalFunction::z_power(j))
        .collect();
    Ok(ToeplitzKernel {
        symbol: s.clone(),
        dimension,
        basis,
    })
}

/// The smallest Toeplitz kernel containing `k`, as `ker T_v` with
/// `v = zbar * conj(theta p) / p` for `k = theta p`.
pub fn minimal_kernel(k: &RationalFunction) -> Result<(ToeplitzSymbol, ToeplitzKernel)> {
    let io = inner_outer(k)?;
    let v = &(&RationalFunction::z_power(-1) * &k.circle_conjugate()) * &io.outer.recip()?;
    let symbol = ToeplitzSymbol::new(v)?;
    let ker = kernel(&symbol)?;
    Ok((symbol, ker))
}

/// Where maximality fails: a zero or pole of the certificate in the disc.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MaximalityWitness {
    DiscZero(Complex64),
    DiscPole(Complex64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct MaximalityCertificate {
    pub vector: RationalFunction,
    /// `p = conj(z s k)`; `k` is maximal iff `p` is outer.
    pub certificate: RationalFunction,
    pub is_maximal: bool,
    pub failure_witness: Option<MaximalityWitness>,
}

pub fn is_maximal(k: &RationalFunction, s: &ToeplitzSymbol) -> Result<MaximalityCertificate> {
    s.require_invertible()?;
    if k.is_zero() {
        return Err(ToeplitzError::ZeroFunction);
    }
    if !in_kernel(k, s) {
        return Err(ToeplitzError::NotInKernel);
    }
    let p = certificate(k, s);
    let failure_witness = p
        .pole_in_closed_disc()
        .map(MaximalityWitness::DiscPole)
        .or_else(|| p.first_zero_at(Location::Inside).map(MaximalityWitness::DiscZero));
    Ok(MaximalityCertificate {
        vector: k.clone(),
        certificate: p,
        is_maximal: failure_witness.is_none(),
        failure_witness,
    })
}

pub(crate) fn admissible_quotient(g: &ToeplitzSymbol, h: &ToeplitzSymbol) -> Result<RationalFunction> {
    if !g.is_circle_invertible() || !h.is_circle_invertible() {
        return Err(ToeplitzError::UndefinedQuotient(
            "symbols must be invertible on the circle".into(),
        ));
    }
    let q = h.value().checked_div(g.value())?;
    if q.has_circle_zero_or_pole() {
        return Err(ToeplitzError::UndefinedQuotient(format!(
            "h/g = {q} has a zero or pole on the circle"
        )));
    }
    Ok(q)
}

/// `ker T_g` is contained in `ker T_h`.
pub fn includes(g: &ToeplitzSymbol, h: &ToeplitzSymbol) -> Result<bool> {
    let q = admissible_quotient(g, h)?;
    if g.require_invertible()? >= 0 {
        return Ok(true);
    }
    Ok(q.circle_conjugate().pole_in_closed_disc().is_none())
}

/// `ker T_g = ker T_h`.
pub fn equals(g: &ToeplitzSymbol, h: &ToeplitzSymbol) -> Result<bool> {
    Ok(includes(g, h)? && includes(h, g)?)
}

/// `g1 = h_minus * g2 * h_plus` with `h_plus^{±1}` analytic on the closed disc
/// and `h_minus^{±1}` analytic on the closed exterior.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceWitness {
    pub h_minus: RationalFunction,
    pub h_plus: RationalFunction,
}

pub fn is_equivalent(
    g1: &ToeplitzSymbol,
    g2: &ToeplitzSymbol,
) -> Result<Option<EquivalenceWitness>> {
    if g1.require_invertible()? != g2.require_invertible()? {
        return Ok(None);
    }
    let wh = wiener_hopf(&g1.div(g2))?;
    debug_assert_eq!(wh.index, 0);
    Ok(Some(EquivalenceWitness {
        h_minus: wh.minus,
        h_plus: wh.plus.recip()?,
    }))
}

/// `p` spans a one-dimensional Toeplitz kernel.
pub fn is_rigid(p: &RationalFunction) -> Result<bool> {
    if p.is_zero() {
        return Err(ToeplitzError::ZeroFunction);
    }
    if let Some(b) = p.pole_in_closed_disc() {
        return Err(ToeplitzError::NotInHardySpace(b.to_string()));
    }
    if let Some(a) = p.first_zero_at(Location::Inside) {
        return Err(ToeplitzError::NotOuter(a.to_string()));
    }
    Ok(minimal_kernel(p)?.1.dimension() == 1)
}

/// `g_minus * theta^{-N} * g_plus^{-1}`, read on the circle.
pub fn assemble_factorized_symbol(
    g_minus: &RationalFunction,
    theta: &BlaschkeProduct,
    n: i32,
    g_plus: &RationalFunction,
) -> Result<ToeplitzSymbol> {
    let theta_bar = theta.to_rational().circle_conjugate();
    let middle = theta_bar.powi(n)?;
    ToeplitzSymbol::new(&(g_minus * &middle) * &g_plus.recip()?)
}

/// Kernel dimension of `g_minus * theta^{-N} * g_plus^{-1}` when
/// `conj(g_minus)` and `g_plus` are outer and `g_plus` is rigid: `n N` for
/// `N > 0`, zero otherwise.
pub fn dim_from_factorization(
    g_minus: &RationalFunction,
    theta: &BlaschkeProduct,
    n: i32,
    g_plus: &RationalFunction,
) -> Result<usize> {
    let violation = |m: &str| ToeplitzError::PreconditionViolation(m.to_string());
    let conj_minus = g_minus.circle_conjugate();
    if g_minus.is_zero() || !conj_minus.is_in_h2() {
        return Err(violation("conj(g_minus) is not in H2"));
    }
    if conj_minus.first_zero_at(Location::Inside).is_some() {
        return Err(violation("conj(g_minus) is not outer"));
    }
    match is_rigid(g_plus) {
        Ok(true) => {}
        Ok(false) => return Err(violation("g_plus^2 is not rigid")),
        Err(ToeplitzError::NotOuter(_)) => return Err(violation("g_plus is not outer")),
        Err(ToeplitzError::NotInHardySpace(_)) => return Err(violation("g_plus is not in H2")),
        Err(e) => return Err(e),
    }
    let dim = if n > 0 {
        theta.degree() as usize * n as usize
    } else {
        0
    };
    let assembled = assemble_factorized_symbol(g_minus, theta, n, g_plus)?;
    if assembled.is_circle_invertible() {
        let direct = kernel(&assembled)?.dimension();
        debug_assert_eq!(direct, dim, "factorization count disagrees with kernel()");
    }
    Ok(dim)
}
