use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extremal-zeta")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn eval_node_value() {
    let out = run(&["eval", "--kind", "minorant", "--alpha", "1", "--delta", "1", "--x", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out)[0]["value"].as_f64().unwrap();
    assert!((v - 8.5f64.ln()).abs() < 1e-12, "{v}");
}

#[test]
fn eval_ft_and_l1() {
    let out = run(&["eval", "--ft", "--xi", "0", "--alpha", "1", "--delta", "1", "--kind", "minorant"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out)[0]["value"].as_f64().unwrap();
    assert!((v - 9.34017).abs() < 1e-5, "{v}");

    let out = run(&["eval", "--l1", "--alpha", "1", "--delta", "1", "--kind", "majorant"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out)[0]["value"].as_f64().unwrap();
    assert!((v - 0.088344).abs() < 1e-5, "{v}");
}

#[test]
fn eval_without_quantity_is_config_error() {
    assert_eq!(run(&["eval", "--alpha", "1", "--delta", "1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--alpha", "1", "--delta", "1", "--kind", "neither", "--l1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--alpha", "1", "--delta", "-1", "--l1"]).status.code(), Some(2));
}

#[test]
fn slow_series_is_flagged() {
    let out = run(&["eval", "--alpha", "0.5000001", "--delta", "1e-9", "--ft", "--xi", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)[0]["terms"], 1_000_000);
    assert_eq!(run(&["eval", "--alpha", "1", "--delta", "1", "--x", "nan"]).status.code(), Some(2));
}

#[test]
fn explicit_formula_balances() {
    let out = run(&["explicit-formula", "--alpha", "1", "--delta", "1", "--t", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let l = &json(&out)[0];
    assert_eq!(l["balanced"], Value::Bool(true));
    assert!(l["residual"]["value"].as_f64().unwrap().abs() <= l["budget"]["value"].as_f64().unwrap());

    let out = run(&["explicit-formula", "--alpha", "0.75", "--delta", "0.5", "--t", "250", "--kind", "majorant"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn explicit_formula_config_errors() {
    let out = run(&["explicit-formula", "--alpha", "1", "--delta", "1", "--t", "100", "--coverage", "150"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("200"));
    let out = run(&["explicit-formula", "--alpha", "1", "--delta", "1", "--t", "100", "--sieve-limit", "100"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["explicit-formula", "--alpha", "1", "--delta", "1", "--t", "100", "--zeros", "/nonexistent/zeros.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_check_and_littlewood() {
    let out = run(&["bounds", "--alpha", "0.75", "--t", "100", "--with-actual", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["holds"] == Value::Bool(true)));

    let out = run(&["bounds", "--littlewood", "--t", "1e4", "--with-actual"]);
    assert_eq!(out.status.code(), Some(0));
    let l = &json(&out)[0];
    assert!(l["upper_slack"].as_f64().unwrap() > 0.0);
    assert!(l["lower_slack"].as_f64().unwrap() > 0.0);
}

#[test]
fn bounds_rejects_alpha_half() {
    assert_eq!(run(&["bounds", "--alpha", "0.5", "--t", "100"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "--alpha", "0.5"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "--alpha", "0.7", "--t", "1:2"]).status.code(), Some(2));
}

#[test]
fn bounds_grid_csv_is_deterministic() {
    let args = ["bounds", "--alpha", "0.7", "--t", "100:1000:300", "--output", "csv"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.starts_with("alpha,t,direction"));
}

#[test]
fn sieve_writes_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let out = run(&["sieve", "--limit", "5000", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(path.exists());
    assert_eq!(json(&out)[0]["chebyshev_ok"], Value::Bool(true));
    assert_eq!(run(&["sieve", "--limit", "1"]).status.code(), Some(2));
}

#[test]
fn data_dir_env_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_extremal-zeta"))
        .args(["explicit-formula", "--alpha", "1", "--delta", "1", "--t", "100"])
        .env("EXTREMAL_ZETA_DATA", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_extremal-zeta"))
        .args(["sieve", "--limit", "100"])
        .env("EXTREMAL_ZETA_DATA", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.path().join("sieve_100.csv").exists());
}

#[test]
fn verify_single_criteria() {
    let out = run(&["verify", "--only", "7,9"]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("[PASS]  7") && err.contains("[PASS]  9"), "{err}");
    assert_eq!(run(&["verify", "--only", "12"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--only", "10"]).status.code(), Some(4));
}
