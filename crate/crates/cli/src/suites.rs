//! Named verification suites for `tk verify`.

use std::panic::{catch_unwind, AssertUnwindSafe};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toeplitz_core::expr::{parse_rational, parse_symbol};
use toeplitz_core::halfplane::cayley_function;
use toeplitz_core::kernels::in_kernel;
use toeplitz_core::multipliers::{carleson_check, RouteRegistry};
use toeplitz_core::oracle::{
    argument_principle_winding, circle_l2_norm, line_l2_norm, numeric_kernel, principal_angle,
    subspace_from_rationals,
};
use toeplitz_core::{
    dim_from_factorization, equals, image_kernel, is_maximal, is_multiplier, kernel,
    minimal_kernel, multiplier_space, multiplier_space_bounded, sample, winding_number,
    BlaschkeProduct, RationalFunction, ToeplitzError, ToeplitzSymbol,
};

#[derive(Debug, Clone, PartialEq)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteContext {
    pub seed: u64,
    pub tol: f64,
}

impl SuiteContext {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, ctx: &SuiteContext) -> Vec<CaseResult>;
}

type Check = Result<(bool, String), ToeplitzError>;

fn case(name: &str, f: impl FnOnce() -> Check) -> CaseResult {
    let (passed, detail) = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok((ok, detail))) => (ok, detail),
        Ok(Err(e)) => (false, format!("{}: {e}", e.code())),
        Err(_) => (false, "panicked".to_string()),
    };
    CaseResult {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rat(text: &str) -> RationalFunction {
    parse_rational(text).expect("literal expression")
}

fn sym(text: &str) -> ToeplitzSymbol {
    parse_symbol(text).expect("literal expression")
}

fn zp(k: i32) -> ToeplitzSymbol {
    ToeplitzSymbol::z_power(k)
}

/// Largest principal angle between the span of `fs` and the monomials `1..z^(n-1)`.
fn angle_to_monomials(fs: &[RationalFunction], n: usize, cap: usize) -> Result<f64, ToeplitzError> {
    let monos: Vec<RationalFunction> = (0..n as i32).map(RationalFunction::z_power).collect();
    let a = subspace_from_rationals(fs, cap)?;
    let b = subspace_from_rationals(&monos, cap)?;
    Ok(principal_angle(&a, &b)?.angle)
}

/// Regression set for the worked facts about model spaces and multipliers.
pub struct PaperExamples;

impl Suite for PaperExamples {
    fn name(&self) -> &'static str {
        "paper-examples"
    }

    fn run(&self, ctx: &SuiteContext) -> Vec<CaseResult> {
        let mut out = Vec::new();
        out.push(case("K_{z^2} is spanned by 1 and z", || {
            let k = kernel(&zp(-2))?;
            let angle = angle_to_monomials(k.basis(), 2, 8)?;
            Ok((k.dimension() == 2 && angle < 1e-12, format!("dimension {}, angle {angle:e}", k.dimension())))
        }));
        out.push(case("K_z consists of the constants", || {
            let (v, k) = minimal_kernel(&RationalFunction::one())?;
            let ok = v.value().approx_eq(&RationalFunction::z_power(-1), 1e-14) && k.dimension() == 1;
            Ok((ok, format!("symbol {}, dimension {}", v.value(), k.dimension())))
        }));
        out.push(case("a+bz is maximal in K_{z^2} iff |a| <= |b|", || {
            let s = zp(-2);
            let mut wrong = Vec::new();
            for i in 0..21 {
                for j in 0..21 {
                    let (a, b) = ((i as f64 - 10.0) / 10.0, (j as f64 - 10.0) / 10.0);
                    if a == 0.0 && b == 0.0 {
                        continue;
                    }
                    let k = RationalFunction::from_coeffs(&[c(a, 0.0), c(b, 0.0)], &[c(1.0, 0.0)])?;
                    if is_maximal(&k, &s)?.is_maximal != (a.abs() <= b.abs()) {
                        wrong.push(format!("({a},{b})"));
                    }
                }
            }
            Ok((wrong.is_empty(), format!("{} grid points disagree {}", wrong.len(), wrong.join(" "))))
        }));
        out.push(case("backward shift of a Blaschke product is maximal in its model space", || {
            let mut rng = ctx.rng();
            let mut fails = 0;
            for n in 1..=4 {
                let theta = sample::blaschke(&mut rng, n).mul(&BlaschkeProduct::z_power(1));
                let t = theta.to_rational();
                let t0 = RationalFunction::constant(t.eval(c(0.0, 0.0)));
                let shift = &(&t - &t0) * &RationalFunction::z_power(-1);
                let s = ToeplitzSymbol::new(t.circle_conjugate())?;
                if !is_maximal(&shift, &s)?.is_maximal {
                    fails += 1;
                }
            }
            Ok((fails == 0, format!("{fails} of 4 degrees fail")))
        }));
        out.push(case("N = 0 and N < 0 give trivial kernels", || {
            let theta = BlaschkeProduct::z_power(2);
            let plus = rat("1+z/2");
            let one = RationalFunction::one();
            let zero = dim_from_factorization(&one, &theta, 0, &plus)?;
            let neg = dim_from_factorization(&one, &theta, -1, &plus)?;
            Ok((zero == 0 && neg == 0, format!("N=0 -> {zero}, N=-1 -> {neg}")))
        }));
        out.push(case("dim ker T_g = nN for theta = z^2, N = 1..3", || {
            let theta = BlaschkeProduct::z_power(2);
            let plus = rat("1+z/2");
            let dims: Vec<usize> = (1..=3)
                .map(|n| dim_from_factorization(&RationalFunction::one(), &theta, n, &plus))
                .collect::<Result<_, _>>()?;
            Ok((dims == vec![2, 4, 6], format!("{dims:?}")))
        }));
        out.push(case("|w|^2 dm is Carleson for K_{z^2} when w = 1/(1+bz), |b| < 1/2", || {
            let k = kernel(&zp(-2))?;
            let bs = [c(0.1, 0.0), c(0.25, 0.0), c(0.45, 0.0), c(0.0, -0.4)];
            let ok = bs.iter().all(|b| {
                let w = RationalFunction::from_coeffs(&[c(1.0, 0.0)], &[c(1.0, 0.0), *b]).unwrap();
                carleson_check(&w, &k)
            });
            Ok((ok, "b in {0.1, 0.25, 0.45, -0.4i}".into()))
        }));
        out.push(case("1+z multiplies K_z into K_{z^2}", || {
            let ok = is_multiplier(&rat("1+z"), &zp(-1), &zp(-2))?;
            Ok((ok, format!("is_multiplier = {ok}")))
        }));
        out.push(case("1/(1+bz) does not multiply K_{z^2} into itself", || {
            let mut detail = Vec::new();
            let mut ok = true;
            for b in [c(0.3, 0.0), c(0.6, 0.0), c(0.9, 0.0), c(0.0, 0.5)] {
                let p = RationalFunction::from_coeffs(&[c(1.0, 0.0), b], &[c(1.0, 0.0)])?;
                let w = p.recip()?;
                let m = is_multiplier(&w, &zp(-2), &zp(-2))?;
                let single = in_kernel(&(&w * &p), &zp(-2));
                ok &= !m && single;
                detail.push(format!("b={}: multiplier {m}, w(1+bz) in kernel {single}", b));
            }
            Ok((ok, detail.join("; ")))
        }));
        out.push(case("M2(K_{z^n}, K_{z^m}) = K_{z^(m-n+1)} for 1 <= n <= m <= 6", || {
            let mut worst = 0.0f64;
            let mut ok = true;
            for n in 1..=6 {
                for m in n..=6 {
                    let sp = multiplier_space(&zp(-n), &zp(-m))?;
                    let d = (m - n + 1) as usize;
                    ok &= sp.space.dimension() == d;
                    worst = worst.max(angle_to_monomials(sp.space.basis(), d, 12)?);
                }
            }
            Ok((ok && worst < 1e-8, format!("largest angle {worst:e}")))
        }));
        out.push(case("reverse inclusion leaves only the zero multiplier", || {
            let sp = multiplier_space(&zp(-2), &zp(-1))?;
            let ok = sp.test_symbol.value().approx_eq(&RationalFunction::one(), 1e-14)
                && sp.space.dimension() == 0;
            Ok((ok, format!("test symbol {}, dimension {}", sp.test_symbol.value(), sp.space.dimension())))
        }));
        out.push(case("Minf(K_z, K_{z^3}) = K_{z^3}, all bounded", || {
            let sp = multiplier_space_bounded(&sym("conj(z)"), &sym("conj(z^3)"))?;
            let angle = angle_to_monomials(sp.space.basis(), 3, 8)?;
            let ok = sp.space.dimension() == 3 && sp.bounded == Some(true) && angle < 1e-12;
            Ok((ok, format!("dimension {}, bounded {:?}", sp.space.dimension(), sp.bounded)))
        }));
        out.push(case("invertible w maps ker T_g onto ker T_{g/w}", || {
            let mut ok = true;
            for (w, g) in [("(1+z/3)/(1-z/4)", "zbar^2"), ("(2+z)/(3-z)", "conj(z*B(0.5))"), ("1+0.5i*z", "zbar^3/(1-z/2)")] {
                let w = rat(w);
                let g = sym(g);
                let target = ToeplitzSymbol::new(g.value() * &w.recip()?)?;
                let img = image_kernel(&w, &g)?;
                ok &= match img {
                    Some(k) => k.dimension() == kernel(&g)?.dimension() && equals(k.symbol(), &target)?,
                    None => false,
                };
            }
            Ok((ok, "three invertible multipliers".into()))
        }));
        out.push(case("tk dim --symbol zbar^2 reports dimension 2", || {
            let r = crate::run_in_process(&["tk", "dim", "--symbol", "zbar^2"]);
            let ok = r.as_ref().is_ok_and(|e| e.report["result"]["dimension"] == 2);
            Ok((ok, "dimension 2".into()))
        }));
        out.push(case("tk m2 --g zbar --h zbar^2 reports basis {1, z}", || {
            let r = crate::run_in_process(&["tk", "m2", "--g", "zbar", "--h", "zbar^2"]);
            let ok = r.as_ref().is_ok_and(|e| {
                e.report["result"]["dimension"] == 2
                    && e.report["result"]["basis"] == serde_json::json!(["1", "z"])
            });
            Ok((ok, "basis [1, z]".into()))
        }));
        out.push(case("tk maximal reports the disc zero of the certificate", || {
            let r = crate::run_in_process(&["tk", "maximal", "--vector", "1+0.5*z", "--symbol", "zbar^2"]);
            let ok = r.as_ref().is_ok_and(|e| {
                e.report["result"]["is_maximal"] == false && e.report["result"]["witness_zero"] == "-0.5"
            });
            Ok((ok, "witness_zero -0.5".into()))
        }));
        out
    }
}

/// Symbolic kernels against the SVD oracle on random symbols.
pub struct OracleSuite;

impl Suite for OracleSuite {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn run(&self, ctx: &SuiteContext) -> Vec<CaseResult> {
        let mut rng = ctx.rng();
        (0..20)
            .map(|i| {
                let s = sample::symbol(&mut rng, 10);
                case(&format!("random symbol {i}: {}", s.value()), || {
                    let k = kernel(&s)?;
                    let nk = numeric_kernel(&s, None)?;
                    let basis = subspace_from_rationals(k.basis(), nk.subspace.degree_cap)?;
                    let angle = principal_angle(&nk.subspace, &basis)?.angle;
                    let wind = argument_principle_winding(s.value())?;
                    let ok = nk.dimension() == k.dimension()
                        && angle < 1e-6
                        && nk.gap_ratio > 1e3
                        && wind == winding_number(&s)?;
                    Ok((ok, format!("dimension {} vs {}, angle {angle:e}, gap {:e}", k.dimension(), nk.dimension(), nk.gap_ratio)))
                })
            })
            .collect()
    }
}

/// Every registered multiplier route gives the same verdict.
pub struct RouteAgreementSuite;

impl Suite for RouteAgreementSuite {
    fn name(&self) -> &'static str {
        "multiplier-routes"
    }

    fn run(&self, ctx: &SuiteContext) -> Vec<CaseResult> {
        let mut rng = ctx.rng();
        let registry = RouteRegistry::default();
        let triples: Vec<_> = (0..100).map(|_| sample::multiplier_triple(&mut rng)).collect();
        vec![case("routes agree on 100 random triples", || {
            let mut positives = 0;
            for (w, g, h) in &triples {
                let verdicts: Vec<bool> = registry
                    .routes()
                    .map(|r| r.decide(w, g, h))
                    .collect::<Result<_, _>>()?;
                if verdicts.windows(2).any(|p| p[0] != p[1]) {
                    return Ok((false, format!("disagreement on w = {w}")));
                }
                positives += verdicts[0] as usize;
            }
            Ok((true, format!("{positives} multipliers, {} non-multipliers", triples.len() - positives)))
        })]
    }
}

/// The half-plane isometry on random rationals.
pub struct CayleySuite;

impl Suite for CayleySuite {
    fn name(&self) -> &'static str {
        "cayley"
    }

    fn run(&self, ctx: &SuiteContext) -> Vec<CaseResult> {
        let mut rng = ctx.rng();
        let tol = ctx.tol.max(1e-6);
        (0..20)
            .map(|i| {
                let f = sample::upper_h2(&mut rng, 6);
                case(&format!("isometry {i}"), || {
                    let line = line_l2_norm(f.value(), 1e-13);
                    let circle = circle_l2_norm(&cayley_function(&f)?, 1 << 14)?;
                    Ok(((line - circle).abs() <= tol * line, format!("{line} vs {circle}")))
                })
            })
            .collect()
    }
}

/// Suites addressable by name.
pub struct SuiteRegistry {
    suites: Vec<Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn register(&mut self, suite: Box<dyn Suite>) {
        self.suites.retain(|s| s.name() != suite.name());
        self.suites.push(suite);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Suite> {
        self.suites.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.name()).collect()
    }
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        let mut reg = Self { suites: Vec::new() };
        reg.register(Box::new(PaperExamples));
        reg.register(Box::new(OracleSuite));
        reg.register(Box::new(RouteAgreementSuite));
        reg.register(Box::new(CayleySuite));
        reg
    }
}
