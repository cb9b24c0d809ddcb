//! JSON rendering of results and errors.

use num_complex::Complex64;
use serde_json::{json, Map, Value};
use toeplitz_core::print::format_complex;
use toeplitz_core::tolerance::{EPS_CIRCLE, EPS_ROOT, WARN_BAND};
use toeplitz_core::{BlaschkeProduct, RationalFunction, ToeplitzError};

pub const ENVELOPE_KEYS: [&str; 6] = ["command", "inputs", "result", "warnings", "tolerances", "seed"];

pub fn raw_complex(c: Complex64) -> Value {
    json!([c.re, c.im])
}

pub fn raw_coeffs(cs: &[Complex64]) -> Value {
    Value::Array(cs.iter().map(|c| raw_complex(*c)).collect())
}

/// Full-precision form of a rational: ascending coefficient pairs.
pub fn raw_rational(r: &RationalFunction) -> Value {
    json!({
        "numerator": raw_coeffs(r.numerator().coeffs()),
        "denominator": raw_coeffs(r.denominator().coeffs()),
    })
}

pub fn printed_complex(c: Complex64) -> Value {
    Value::String(format_complex(c))
}

pub fn blaschke(b: &BlaschkeProduct) -> (Value, Value) {
    let zeros: Vec<Value> = b
        .zeros()
        .iter()
        .map(|r| json!({"value": format_complex(r.value), "multiplicity": r.multiplicity}))
        .collect();
    let raw_zeros: Vec<Value> = b
        .zeros()
        .iter()
        .map(|r| json!({"value": raw_complex(r.value), "multiplicity": r.multiplicity}))
        .collect();
    (
        json!({
            "constant": format_complex(b.constant()),
            "zeros": zeros,
            "degree": b.degree(),
            "function": b.to_rational().to_string(),
        }),
        json!({"constant": raw_complex(b.constant()), "zeros": raw_zeros}),
    )
}

pub fn tolerances(tol: f64) -> Value {
    json!({
        "tol": tol,
        "eps_root": EPS_ROOT,
        "eps_circle": EPS_CIRCLE,
        "warn_band": WARN_BAND,
        "null_threshold": toeplitz_core::oracle::NULL_THRESHOLD,
    })
}

pub fn envelope(
    command: &str,
    inputs: Map<String, Value>,
    result: Value,
    warnings: Vec<String>,
    tol: f64,
    seed: u64,
) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "result": result,
        "warnings": warnings,
        "tolerances": tolerances(tol),
        "seed": seed,
    })
}

/// Error object written on exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub position: Option<usize>,
}

impl CliError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        Self {
            code: code.to_string(),
            message: message.into(),
            position: None,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": self.code, "message": self.message, "position": self.position})
    }
}

impl From<ToeplitzError> for CliError {
    fn from(e: ToeplitzError) -> Self {
        Self {
            code: e.code().to_string(),
            message: e.to_string(),
            position: e.position(),
        }
    }
}

/// Checks the documented envelope shape; returns the first problem found.
pub fn validate_envelope(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("report is not an object")?;
    for key in ENVELOPE_KEYS {
        if !obj.contains_key(key) {
            return Err(format!("missing key '{key}'"));
        }
    }
    if obj.len() != ENVELOPE_KEYS.len() {
        return Err("unexpected extra keys".into());
    }
    if !obj["command"].is_string() {
        return Err("'command' is not a string".into());
    }
    let inputs = obj["inputs"].as_object().ok_or("'inputs' is not an object")?;
    if !inputs.values().all(Value::is_string) {
        return Err("'inputs' values must be strings".into());
    }
    if !obj["result"].is_object() {
        return Err("'result' is not an object".into());
    }
    let warnings = obj["warnings"].as_array().ok_or("'warnings' is not an array")?;
    if !warnings.iter().all(Value::is_string) {
        return Err("'warnings' entries must be strings".into());
    }
    let tols = obj["tolerances"].as_object().ok_or("'tolerances' is not an object")?;
    if !tols.values().all(Value::is_number) {
        return Err("'tolerances' values must be numbers".into());
    }
    if !obj["seed"].is_u64() {
        return Err("'seed' is not a nonnegative integer".into());
    }
    Ok(())
}

/// Plain-text rendering of a report.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    let mut line = |k: &str, val: &Value| {
        let s = match val {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{k}: {s}\n"));
    };
    line("command", &v["command"]);
    if let Some(inputs) = v["inputs"].as_object() {
        for (k, val) in inputs {
            line(&format!("input {k}"), val);
        }
    }
    if let Some(result) = v["result"].as_object() {
        for (k, val) in result.iter().filter(|(k, _)| k.as_str() != "raw") {
            line(k, val);
        }
    }
    if let Some(ws) = v["warnings"].as_array() {
        for w in ws {
            line("warning", w);
        }
    }
    out
}
