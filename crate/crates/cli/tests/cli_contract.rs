use std::process::{Command, Output};

use serde_json::Value;
use toeplitz_cli::validate_envelope;

fn tk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tk")).args(args).output().expect("tk runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const INVOCATIONS: &[&[&str]] = &[
    &["kernel", "--symbol", "zbar^3*(1-0.5*z)"],
    &["dim", "--symbol", "zbar^2"],
    &["minkernel", "--vector", "1+0.5*z"],
    &["maximal", "--vector", "1+0.5*z", "--symbol", "zbar^2"],
    &["factor", "--mode", "inner-outer", "--f", "(z-0.5)*(z-3)"],
    &["factor", "--mode", "wiener-hopf", "--f", "zbar^2*(1-0.3*z)/(1-0.2*zbar)"],
    &["mult", "--w", "1+z", "--g", "zbar", "--h", "zbar^2"],
    &["mult", "--w", "1+z", "--g", "zbar", "--h", "zbar^2", "--route", "smirnov"],
    &["m2", "--g", "zbar", "--h", "zbar^3"],
    &["minf", "--g", "zbar", "--h", "zbar^3"],
    &["include", "--g", "zbar", "--h", "zbar^2"],
    &["equal", "--g", "zbar^2", "--h", "zbar^2*(1-0.5*zbar)/(1-0.5*z)"],
    &["equiv", "--g1", "zbar^2*(2+z)", "--g2", "zbar^2"],
    &["crofoot", "--w", "1/(1-0.5*z)", "--theta", "z"],
    &["surjective", "--w", "1+z", "--g", "zbar", "--h", "zbar^2"],
    &["rigid", "--p", "1+0.5*z"],
    &["cayley", "--mode", "function", "--f", "1/(s+i)^2"],
    &["cayley", "--mode", "symbol", "--f", "(s-i)/(s+i)"],
    &["verify", "--suite", "oracle"],
];

#[test]
fn every_subcommand_emits_a_valid_envelope() {
    for args in INVOCATIONS {
        let out = tk(args);
        let doc = json(&out);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {doc}");
        validate_envelope(&doc).unwrap_or_else(|e| panic!("{args:?}: {e}\n{doc}"));
        assert_eq!(doc["command"], args[0], "{args:?}");
    }
}

#[test]
fn inline_verification_reports_the_oracle() {
    let out = tk(&["kernel", "--symbol", "zbar^3", "--verify-inline"]);
    let doc = json(&out);
    assert_eq!(out.status.code(), Some(0), "{doc}");
    validate_envelope(&doc).unwrap();
    let text = doc.to_string();
    assert!(text.contains("oracle"), "{text}");
}

#[test]
fn bad_input_gives_an_error_object_and_exit_two() {
    let cases: &[(&[&str], &str)] = &[
        (&["kernel", "--symbol", "exp(z)"], "SyntaxError"),
        (&["dim", "--symbol", "zbar*(z-1)"], "NotInvertibleOnCircle"),
        (&["mult", "--w", "1", "--g", "zbar", "--h", "zbar", "--route", "nope"], "UnknownRoute"),
        (&["verify", "--suite", "nope"], "UnknownSuite"),
    ];
    for (args, code) in cases {
        let out = tk(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let doc = json(&out);
        assert_eq!(doc["error"], *code, "{args:?}: {doc}");
        assert!(doc["message"].is_string());
        assert!(doc.get("position").is_some());
    }
}

#[test]
fn report_flag_writes_the_envelope_to_disk() {
    let path = std::env::temp_dir().join(format!("tk-report-{}.json", std::process::id()));
    let out = tk(&["dim", "--symbol", "zbar^2", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    validate_envelope(&written).unwrap();
    assert_eq!(written, json(&out));
}

#[test]
fn text_mode_is_not_json() {
    let out = tk(&["m2", "--g", "zbar", "--h", "zbar^2", "--text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(serde_json::from_slice::<Value>(&out.stdout).is_err());
}

#[test]
fn in_process_runner_matches_the_binary() {
    let run = toeplitz_cli::run_in_process(&["tk", "dim", "--symbol", "zbar^2"]).unwrap();
    assert_eq!(run.exit_code, 0);
    assert_eq!(run.report["result"]["dimension"], 2);
}
