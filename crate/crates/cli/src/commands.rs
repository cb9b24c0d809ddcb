//! One function per subcommand, each returning the `result` object.

use serde_json::{json, Map, Value};
use toeplitz_core::expr::{parse_expression, parse_halfplane_expression};
use toeplitz_core::halfplane::{cayley_function, cayley_symbol, HalfPlaneRational};
use toeplitz_core::kernels::MaximalityWitness;
use toeplitz_core::multipliers::RouteRegistry;
use toeplitz_core::oracle::{numeric_kernel, principal_angle, subspace_from_rationals};
use toeplitz_core::print::format_complex;
use toeplitz_core::{
    crofoot_companion, equals, includes, inner_outer, is_equivalent, is_maximal, is_rigid,
    is_surjective_multiplier, kernel, minimal_kernel, multiplier_space, multiplier_space_bounded,
    wiener_hopf, BlaschkeProduct, MultiplierSpace, RationalFunction, ToeplitzKernel,
    ToeplitzSymbol,
};

use crate::args::{CayleyMode, Cli, Command, FactorMode};
use crate::report::{blaschke, envelope, printed_complex, raw_complex, raw_rational, CliError};
use crate::suites::{SuiteContext, SuiteRegistry};

/// Principal-angle tolerance for inline oracle comparisons.
pub const ORACLE_ANGLE_TOL: f64 = 1e-6;

pub const MULTIPLIER_NOTE: &str = "for rational data every Smirnov-class multiplier with the \
Carleson property is rational, so the unrestricted multiplier space coincides with M2 here";

/// A finished command: the report and the process exit code (0 or 1).
#[derive(Debug, Clone)]
pub struct Execution {
    pub report: Value,
    pub exit_code: i32,
}

#[derive(Default)]
struct Inputs {
    inputs: Map<String, Value>,
    warnings: Vec<String>,
}

impl Inputs {
    fn note(&mut self, flag: &str, r: &RationalFunction) {
        self.inputs.insert(flag.to_string(), Value::String(r.to_string()));
        for root in r.near_band_roots() {
            self.warnings.push(format!(
                "ClassificationWarning: --{flag} has a zero or pole at {} within {:e} of the unit circle",
                format_complex(root),
                toeplitz_core::tolerance::WARN_BAND
            ));
        }
    }

    fn rational(&mut self, flag: &str, text: &str) -> Result<RationalFunction, CliError> {
        let r = parse_expression(text)?.lower()?;
        self.note(flag, &r);
        Ok(r)
    }

    fn symbol(&mut self, flag: &str, text: &str) -> Result<ToeplitzSymbol, CliError> {
        Ok(ToeplitzSymbol::new(self.rational(flag, text)?)?)
    }

    fn halfplane(&mut self, flag: &str, text: &str) -> Result<HalfPlaneRational, CliError> {
        let r = parse_halfplane_expression(text)?.lower()?;
        self.inputs.insert(flag.to_string(), Value::String(r.to_string().replace('z', "s")));
        Ok(HalfPlaneRational::new(r))
    }
}

fn printed(rs: &[RationalFunction]) -> Value {
    Value::Array(rs.iter().map(|r| Value::String(r.to_string())).collect())
}

fn raws(rs: &[RationalFunction]) -> Value {
    Value::Array(rs.iter().map(raw_rational).collect())
}

fn kernel_object(k: &ToeplitzKernel) -> Value {
    json!({
        "dimension": k.dimension(),
        "winding": k.symbol().winding(),
        "basis": printed(k.basis()),
        "raw": {"basis": raws(k.basis())},
    })
}

/// Oracle cross-check of a symbolic kernel; returns the summary and whether it agrees.
fn oracle_check(k: &ToeplitzKernel, warnings: &mut Vec<String>) -> Result<(Value, bool), CliError> {
    let nk = numeric_kernel(k.symbol(), None)?;
    warnings.extend(nk.warnings.iter().cloned());
    let sym = subspace_from_rationals(k.basis(), nk.subspace.degree_cap)?;
    let angle = principal_angle(&nk.subspace, &sym)?;
    let ok = nk.dimension() == k.dimension() && angle.angle < ORACLE_ANGLE_TOL;
    let gap = if nk.gap_ratio.is_finite() { json!(nk.gap_ratio) } else { Value::Null };
    Ok((
        json!({
            "dimension": nk.dimension(),
            "principal_angle": angle.angle,
            "gap_ratio": gap,
            "degree_cap": nk.subspace.degree_cap,
        }),
        ok,
    ))
}

fn space_object(m: &MultiplierSpace) -> Value {
    json!({
        "dimension": m.space.dimension(),
        "test_symbol": m.test_symbol.value().to_string(),
        "basis": printed(m.space.basis()),
        "carleson_filtered": m.carleson_filtered,
        "bounded": m.bounded,
        "note": MULTIPLIER_NOTE,
        "raw": {
            "test_symbol": raw_rational(m.test_symbol.value()),
            "basis": raws(m.space.basis()),
        },
    })
}

pub fn execute(cli: &Cli) -> Result<Execution, CliError> {
    let mut io = Inputs::default();
    let mut exit_code = 0;
    let result = match &cli.command {
        Command::Kernel { symbol } => {
            let s = io.symbol("symbol", symbol)?;
            let k = kernel(&s)?;
            let mut obj = kernel_object(&k);
            if cli.verify_inline {
                let (oracle, ok) = oracle_check(&k, &mut io.warnings)?;
                obj["oracle"] = oracle;
                if !ok {
                    exit_code = 1;
                }
            }
            obj
        }
        Command::Dim { symbol } => {
            let s = io.symbol("symbol", symbol)?;
            let k = kernel(&s)?;
            let mut obj = json!({"dimension": k.dimension(), "winding": s.winding()});
            if cli.verify_inline {
                let (oracle, ok) = oracle_check(&k, &mut io.warnings)?;
                obj["oracle"] = oracle;
                if !ok {
                    exit_code = 1;
                }
            }
            obj
        }
        Command::Minkernel { vector } => {
            let k = io.rational("vector", vector)?;
            let (v, ker) = minimal_kernel(&k)?;
            let mut obj = kernel_object(&ker);
            obj["symbol"] = json!(v.value().to_string());
            obj["raw"]["symbol"] = raw_rational(v.value());
            obj
        }
        Command::Maximal { vector, symbol } => {
            let k = io.rational("vector", vector)?;
            let s = io.symbol("symbol", symbol)?;
            let cert = is_maximal(&k, &s)?;
            let mut obj = json!({
                "is_maximal": cert.is_maximal,
                "certificate": cert.certificate.to_string(),
                "raw": {"certificate": raw_rational(&cert.certificate)},
            });
            match cert.failure_witness {
                Some(MaximalityWitness::DiscZero(a)) => {
                    obj["witness_zero"] = printed_complex(a);
                    obj["raw"]["witness_zero"] = raw_complex(a);
                }
                Some(MaximalityWitness::DiscPole(a)) => {
                    obj["witness_pole"] = printed_complex(a);
                    obj["raw"]["witness_pole"] = raw_complex(a);
                }
                None => {}
            }
            obj
        }
        Command::Factor { mode, f } => match mode {
            FactorMode::InnerOuter => {
                let f = io.rational("f", f)?;
                let fac = inner_outer(&f)?;
                let (inner, raw_inner) = blaschke(&fac.inner);
                json!({
                    "mode": "inner-outer",
                    "inner": inner,
                    "outer": fac.outer.to_string(),
                    "raw": {"inner": raw_inner, "outer": raw_rational(&fac.outer)},
                })
            }
            FactorMode::WienerHopf => {
                let s = io.symbol("f", f)?;
                let wh = wiener_hopf(&s)?;
                json!({
                    "mode": "wiener-hopf",
                    "minus": wh.minus.to_string(),
                    "index": wh.index,
                    "plus": wh.plus.to_string(),
                    "raw": {"minus": raw_rational(&wh.minus), "plus": raw_rational(&wh.plus)},
                })
            }
        },
        Command::Mult { w, g, h, route } => {
            let w = io.rational("w", w)?;
            let g = io.symbol("g", g)?;
            let h = io.symbol("h", h)?;
            let registry = RouteRegistry::default();
            let chosen = registry.get(route).ok_or_else(|| {
                CliError::new(
                    "UnknownRoute",
                    format!("unknown route '{route}'; available: {}", registry.names().join(", ")),
                )
            })?;
            let verdict = chosen.decide(&w, &g, &h)?;
            let mut obj = json!({"is_multiplier": verdict, "route": chosen.name()});
            if cli.verify_inline {
                let mut others = Map::new();
                for r in registry.routes() {
                    let v = r.decide(&w, &g, &h)?;
                    if v != verdict {
                        exit_code = 1;
                    }
                    others.insert(r.name().to_string(), json!(v));
                }
                obj["routes"] = Value::Object(others);
            }
            obj
        }
        Command::M2 { g, h } => {
            let g = io.symbol("g", g)?;
            let h = io.symbol("h", h)?;
            space_object(&multiplier_space(&g, &h)?)
        }
        Command::Minf { g, h } => {
            let g = io.symbol("g", g)?;
            let h = io.symbol("h", h)?;
            space_object(&multiplier_space_bounded(&g, &h)?)
        }
        Command::Include { g, h } => {
            let g = io.symbol("g", g)?;
            let h = io.symbol("h", h)?;
            json!({"includes": includes(&g, &h)?})
        }
        Command::Equal { g, h } => {
            let g = io.symbol("g", g)?;
            let h = io.symbol("h", h)?;
            json!({"equals": equals(&g, &h)?})
        }
        Command::Equiv { g1, g2 } => {
            let g1 = io.symbol("g1", g1)?;
            let g2 = io.symbol("g2", g2)?;
            match is_equivalent(&g1, &g2)? {
                Some(wit) => json!({
                    "equivalent": true,
                    "h_minus": wit.h_minus.to_string(),
                    "h_plus": wit.h_plus.to_string(),
                    "raw": {"h_minus": raw_rational(&wit.h_minus), "h_plus": raw_rational(&wit.h_plus)},
                }),
                None => json!({"equivalent": false}),
            }
        }
        Command::Crofoot { w, theta } => {
            let w = io.rational("w", w)?;
            let t = io.rational("theta", theta)?;
            let theta = BlaschkeProduct::from_rational(&t).ok_or_else(|| {
                CliError::new("PreconditionViolation", "theta is not a finite Blaschke product")
            })?;
            match crofoot_companion(&theta, &w)? {
                Some(cc) => {
                    let (companion, raw_companion) = blaschke(&cc.companion);
                    json!({
                        "is_blaschke": true,
                        "companion": companion,
                        "alpha": format_complex(cc.alpha),
                        "raw": {"companion": raw_companion, "alpha": raw_complex(cc.alpha)},
                    })
                }
                None => json!({"is_blaschke": false}),
            }
        }
        Command::Surjective { w, g, h } => {
            let w = io.rational("w", w)?;
            let g = io.symbol("g", g)?;
            let h = io.symbol("h", h)?;
            let r = is_surjective_multiplier(&w, &g, &h)?;
            json!({
                "holds": r.holds,
                "outer_ok": r.outer_ok,
                "carleson_forward_ok": r.carleson_forward_ok,
                "carleson_inverse_ok": r.carleson_inverse_ok,
                "symbol_identity_ok": r.symbol_identity_ok,
                "note": MULTIPLIER_NOTE,
            })
        }
        Command::Rigid { p } => {
            let p = io.rational("p", p)?;
            json!({"rigid": is_rigid(&p)?})
        }
        Command::Cayley { mode, f } => {
            let f = io.halfplane("f", f)?;
            let (mode, v) = match mode {
                CayleyMode::Function => ("function", cayley_function(&f)?),
                CayleyMode::Symbol => ("symbol", cayley_symbol(&f)?.into_value()),
            };
            json!({"mode": mode, "value": v.to_string(), "raw": {"value": raw_rational(&v)}})
        }
        Command::Verify { suite } => {
            let registry = SuiteRegistry::default();
            let runner = registry.get(suite).ok_or_else(|| {
                CliError::new(
                    "UnknownSuite",
                    format!("unknown suite '{suite}'; available: {}", registry.names().join(", ")),
                )
            })?;
            let ctx = SuiteContext { seed: cli.seed, tol: cli.tol };
            let cases = runner.run(&ctx);
            let failed = cases.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                exit_code = 1;
            }
            io.inputs.insert("suite".into(), json!(runner.name()));
            json!({
                "suite": runner.name(),
                "passed": cases.len() - failed,
                "failed": failed,
                "cases": cases.iter().map(|c| json!({
                    "name": c.name,
                    "passed": c.passed,
                    "detail": c.detail,
                })).collect::<Vec<_>>(),
            })
        }
    };
    Ok(Execution {
        report: envelope(cli.command.name(), io.inputs, result, io.warnings, cli.tol, cli.seed),
        exit_code,
    })
}
