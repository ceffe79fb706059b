use std::process::Command;

use lojex_cli::{run, EXIT_INPUT, EXIT_OK, EXIT_UNDEFINED};
use serde_json::Value;

fn lojex(args: &[&str]) -> lojex_cli::Output {
    run(std::iter::once("lojex").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = lojex(args);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn exponent_text() {
    let out = lojex(&["exponent", "-f", "x^2", "-g", "x*(x^2+y^2)"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("defined; L = 2 (= 2/1)"), "{}", out.stdout);
    assert!(out.stdout.contains("decimal: 2.000000"));
    assert!(out.stdout.contains("multiplicities 2 in f and 1 in g"));
}

#[test]
fn exponent_json_schema() {
    let v = json(&["exponent", "-f", "x^2", "-g", "x*(x^2+y^2)", "--json"]);
    assert_eq!(v["defined"], true);
    assert_eq!(v["exponent"]["num"], 2);
    assert_eq!(v["exponent"]["den"], 1);
    assert_eq!(v["shear_c"], 0);
    assert_eq!(v["direction"], "positive");
    assert!(v["witness"].as_str().unwrap().starts_with("common root"));

    let v = json(&["exponent", "-f", "x^2 + y^4", "-g", "y", "--json"]);
    assert_eq!(v["exponent"]["num"], 4);
    assert_eq!(v["exponent"]["den"], 1);
}

#[test]
fn undefined_exponent() {
    let out = lojex(&["exponent", "-f", "x*y", "-g", "x", "--json"]);
    assert_eq!(out.code, EXIT_UNDEFINED);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["defined"], false);
    assert_eq!(v["reason"], "inclusion_fails");
    assert!(v["violating_branch"].is_string());
    assert!(v.get("exponent").is_none());

    let out = lojex(&["exponent", "-f", "x*y", "-g", "x"]);
    assert_eq!(out.code, EXIT_UNDEFINED);
    assert!(out.stdout.contains("undefined"));
}

#[test]
fn validate_reports_both_checks() {
    let v = json(&["exponent", "-f", "x^2", "-g", "x*(x^2+y^2)", "--json", "--validate", "--seed", "3"]);
    assert_eq!(v["validation"]["pair_formula"]["num"], 2);
    let est = v["validation"]["oracle_estimate"].as_f64().unwrap();
    assert!((1.85..=2.0).contains(&est), "{est}");
}

#[test]
fn polygon_example() {
    let out = lojex(&["polygon", "-f", "x^3 - y^5 + y^6", "--arc", "y^(5/3)"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("dots: (0, 6) (1, 10/3) (2, 5/3) (3, 0)"), "{}", out.stdout);
    assert!(out.stdout.contains("slopes: 8/3, 5/3"));
    let v = json(&["polygon", "-f", "x^3 - y^5 + y^6", "--arc", "y^(5/3)", "--json"]);
    assert_eq!(v["slopes"][0]["num"], 8);
    assert_eq!(v["slopes"][1]["den"], 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn polygon_of_a_root() {
    let out = lojex(&["polygon", "-f", "x - y^2", "--arc", "y^2"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("edge slope inf"));
    assert!(out.stdout.contains("the arc is a root"));
}

#[test]
fn limits() {
    let out = lojex(&["limit", "-n", "x*y^2", "-d", "x^2+y^4"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("does not exist"), "{}", out.stdout);
    let v = json(&["limit", "-n", "x^3*y", "-d", "x^2+y^2", "--json"]);
    assert_eq!(v["exists"], true);
    assert_eq!(v["value"]["num"], 0);
    let v = json(&["limit", "-n", "x^2+y^2", "-d", "x^2+y^2", "--json"]);
    assert_eq!(v["value"]["num"], 1);
}

#[test]
fn roots_listing() {
    let out = lojex(&["roots", "-f", "(x - y^2)^3 * (x + y)"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("2 distinct roots, order 4 in x"), "{}", out.stdout);
    assert!(out.stdout.contains("multiplicity 3"));
    let v = json(&["roots", "-f", "x^2 + y^3", "--json"]);
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 2);
    assert!(roots.iter().all(|r| r["real"] == false));
}

#[test]
fn input_errors() {
    for args in [
        &["exponent", "-f", "x^y", "-g", "x"][..],
        &["exponent", "-f", "1 + x", "-g", "x"],
        &["exponent", "-f", "0", "-g", "x"],
        &["polygon", "-f", "x", "--arc", "x"],
        &["limit", "-n", "x", "-d", "0"],
        &["frobnicate"],
        &["exponent", "-f", "x"],
    ] {
        let out = lojex(args);
        assert_eq!(out.code, EXIT_INPUT, "{args:?}: {out:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    let out = lojex(&["exponent", "-f", "x^y", "-g", "x"]);
    assert!(out.stderr.contains("position 2"), "{}", out.stderr);
}

#[test]
fn help_succeeds() {
    let out = lojex(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("exponent"));
}

#[test]
fn binary_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_lojex");
    let args = ["exponent", "-f", "x^2 + y^4", "-g", "x*y", "--json", "--validate"];
    let a = Command::new(bin).args(args).output().unwrap();
    let b = Command::new(bin).args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let bad = Command::new(bin).args(["limit", "-n", "x", "-d", "y^"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_INPUT));
}
