use std::process::{Command, Output};

use approxsys::catalog::{catalog_get, EntryKind, Params};
use approxsys::poly::UniPoly;
use approxsys::system::build_approximants;
use approxsys::GaussianRational;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_approxsys")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn csv_rows(args: &[&str]) -> Vec<Vec<String>> {
    stdout(args).lines().skip(1).map(|l| l.split(',').map(str::to_string).collect()).collect()
}

fn coefficients(doc: &Value) -> Vec<String> {
    doc["coefficients"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect()
}

#[test]
fn list_names_every_entry() {
    let doc = json(&["list"]);
    let names: Vec<&str> = doc["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    for want in ["exp", "sinh", "sin", "cosh", "cos", "dde_exp", "log", "taylor"] {
        assert!(names.contains(&want), "missing {want}");
    }
    assert_eq!(csv_rows(&["list", "--format", "csv"]).len(), EntryKind::ALL.len());
    let xml = run(&["list", "--format", "xml"]);
    assert_eq!(xml.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&xml.stderr).contains("unsupported format"));
}

#[test]
fn approximate_examples() {
    assert_eq!(coefficients(&json(&["approximate", "exp", "--p", "2", "--n", "2"])), ["1", "1", "1/2", "1/12"]);
    assert_eq!(coefficients(&json(&["approximate", "log", "--p", "2", "--R", "0.5", "--n", "1"])), ["0", "1"]);
    let bad = run(&["approximate", "sinh", "--p", "3"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("even"));
    assert_eq!(run(&["approximate", "dde_exp", "--p", "2"]).status.code(), Some(2));
}

#[test]
fn serialized_coefficients_parse_back_exactly() {
    for (entry, n) in [("exp", "4"), ("sin", "3"), ("log", "3"), ("cos", "2")] {
        let doc = json(&["approximate", entry, "--n", n, "--all-rows"]);
        let kind: EntryKind = entry.parse().unwrap();
        let table = build_approximants(&catalog_get(kind, Params::default()).unwrap().system, n.parse().unwrap()).unwrap();
        for (i, row) in doc["rows"].as_array().unwrap().iter().enumerate() {
            let parsed: Vec<GaussianRational> = row.as_array().unwrap().iter().map(|v| v.as_str().unwrap().parse().unwrap()).collect();
            assert_eq!(UniPoly::new(parsed), table.rows[i], "{entry} row {i}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    for args in [&["approximate", "cosh", "--n", "3"][..], &["bound", "exp", "--n", "4"], &["verify", "prefix"]] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn eval_grids() {
    let rows = csv_rows(&["eval", "exp", "--p", "2", "--n", "3", "--segment", "0,1", "--points", "101"]);
    assert_eq!(rows.len(), 101);
    let max_err = rows.iter().map(|r| r[6].parse::<f64>().unwrap()).fold(0.0, f64::max);
    let bound = std::f64::consts::E / 192.0;
    assert!(max_err > 0.0 && max_err <= bound, "{max_err} vs {bound}");

    let one = csv_rows(&["eval", "exp", "--segment", "0.25,1", "--points", "1"]);
    assert_eq!(one.len(), 1);
    assert_eq!(one[0][0].parse::<f64>().unwrap(), 0.25);
    assert_eq!(run(&["eval", "exp", "--points", "0"]).status.code(), Some(2));

    let circle = csv_rows(&["eval", "sin", "--n", "4", "--circle", "0,0.5", "--points", "16"]);
    assert_eq!(circle.len(), 16);
}

#[test]
fn bound_variants() {
    let doc = json(&["bound", "exp", "--p", "2", "--R", "1", "--n", "3", "--variant", "closed-form"]);
    let v: f64 = doc["value"].to_string().parse().unwrap();
    assert!((v - std::f64::consts::E / 192.0).abs() < 1e-15);

    let sin = run(&["bound", "sin", "--n", "2", "--variant", "fde"]);
    assert_eq!(sin.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&sin.stderr).contains("not positive"));

    // n = 0, variant B: ‖f_0‖ R with f_0 = y² on B(1, e^(1/2) − 1) × B(0, 1)
    let doc = json(&["bound", "exp", "--n", "0", "--variant", "B"]);
    let v: f64 = doc["value"].to_string().parse().unwrap();
    assert!((v - 0.5f64.exp().powi(2)).abs() < 1e-12, "{v}");
    assert_eq!(doc["factors"].as_array().unwrap().len(), 1);

    for variant in ["A", "fde"] {
        let doc = json(&["bound", "exp", "--n", "3", "--variant", variant]);
        assert_eq!(doc["rigorous"], Value::Bool(true));
    }
    assert!(json(&["bound", "picard", "--n", "2", "--variant", "uniform"])["value"].is_number());
    assert_eq!(run(&["bound", "exp", "--variant", "uniform"]).status.code(), Some(2));
    assert_eq!(run(&["bound", "taylor", "--variant", "closed-form"]).status.code(), Some(2));
}

#[test]
fn numeric_paths() {
    let rows = csv_rows(&["numeric", "exp", "--p", "2", "--n", "2", "--segment", "0,1", "--N", "1000"]);
    assert_eq!(rows.len(), 1001);
    let terminal: f64 = rows[1000][3].parse().unwrap();
    assert!((terminal - 31.0 / 12.0).abs() <= 5e-3);

    assert_eq!(run(&["numeric", "exp", "--segment", "0,1", "--N", "0"]).status.code(), Some(2));

    let rows = csv_rows(&["numeric", "cos", "--p", "2", "--n", "1", "--segment", "0,0.8", "--N", "20000"]);
    let terminal: f64 = rows.last().unwrap()[3].parse().unwrap();
    assert!((terminal - (1.0 - 8.0 * 0.2f64.sin().powi(2))).abs() < 1e-4);

    let doc = json(&["numeric", "exp", "--n", "2", "--polyline", "0,0.5+0.5i,1i", "--N", "50", "--all-rows", "--format", "json"]);
    assert_eq!(doc["values"].as_array().unwrap().len(), 3);
    assert_eq!(doc["N"], 100);
}

#[test]
fn verify_scopes() {
    let doc = json(&["verify", "positivity"]);
    assert_eq!(doc["passed"], Value::Bool(true));
    let names: Vec<&str> = doc["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.contains("sin")), "{names:?}");
    assert!(run(&["verify", "prefix"]).status.success());
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
}
