use std::process::{Command, Output};

use qmock_core::algebra::int;
use qmock_core::hyperterm::QuadPoly;
use qmock_core::{HypergeometricTerm, Monomial, PochFactor, QSeries};

fn qmock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmock")).args(args).env_remove("QMOCK_ORDER").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn coeffs(v: &serde_json::Value) -> Vec<(i64, String)> {
    v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["k"].as_i64().unwrap(), c["c"].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn expand_f_json() {
    let o = qmock(&["expand", "--name", "f", "--order", "4", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    let got: Vec<_> = coeffs(&v).into_iter().map(|(_, c)| c).collect();
    assert_eq!(got, ["1", "1", "-2", "3", "-3"]);
    assert_eq!(v["order"], 4);
    assert_eq!(v["name"], "f");
}

#[test]
fn expand_psi_text() {
    let o = qmock(&["expand", "--name", "psi", "--order", "12"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let body = out.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(body, "1 - q + q^2 - q^5 + q^7 - q^12 + O(q^13)");
}

#[test]
fn expand_inverted_g3_3() {
    let inv = json(&qmock(&["expand", "--name", "g3_3", "--inverted", "--order", "8", "--format", "json"]));
    assert_eq!(inv["regime"], "inverted");
    let psi1 = json(&qmock(&["expand", "--name", "psi1", "--w", "1/3", "--order", "8", "--format", "json"]));
    let inv3 = json(&qmock(&["expand", "--name", "g3_3", "--inverted", "--w", "3", "--order", "8", "--format", "json"]));
    assert_eq!(coeffs(&inv3), coeffs(&psi1));
}

#[test]
fn json_round_trip_is_byte_identical() {
    let o = qmock(&["expand", "--name", "R", "--order", "6", "--format", "json"]);
    let v = json(&o);
    let s = QSeries::from_json(&v).unwrap();
    let mut again = s.to_json();
    for key in ["name", "anchor", "regime", "w"] {
        again[key] = v[key].clone();
    }
    let pretty = serde_json::to_string_pretty(&again).unwrap();
    assert_eq!(pretty.trim_end(), stdout(&o).trim_end());
}

#[test]
fn expand_from_term_file() {
    // f(q) written out by hand
    let t = HypergeometricTerm::new()
        .q(QuadPoly::int(1, 0, 0))
        .factor(PochFactor::den(Monomial::new(int(-1), 0, 1), 1, 0).times(2));
    let path = std::env::temp_dir().join(format!("qmock-term-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&t).unwrap()).unwrap();
    let o = qmock(&["expand", "--term-file", path.to_str().unwrap(), "--order", "4", "--format", "json"]);
    std::fs::remove_file(&path).ok();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let got: Vec<_> = coeffs(&json(&o)).into_iter().map(|(_, c)| c).collect();
    assert_eq!(got, ["1", "1", "-2", "3", "-3"]);
}

#[test]
fn order_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qmock"))
        .args(["expand", "--name", "psi", "--format", "json"])
        .env("QMOCK_ORDER", "7")
        .output()
        .unwrap();
    assert_eq!(json(&o)["order"], 7);
}

#[test]
fn verify_exit_codes() {
    let ok = qmock(&["verify", "--id", "thm3.1a", "--order", "20"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("thm3.1a"));
    assert_eq!(qmock(&["verify", "--id", "nosuch"]).status.code(), Some(2));
    assert_eq!(qmock(&["expand", "--name", "nosuch"]).status.code(), Some(2));
    assert_eq!(qmock(&["verify"]).status.code(), Some(2));
    assert_eq!(qmock(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_json_report() {
    let o = qmock(&["verify", "--id", "fstar-inv", "--order", "12", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    let r = if v.is_array() { v[0].clone() } else { v };
    assert_eq!(r["id"], "fstar-inv");
    assert_eq!(r["status"], "pass");
}

#[test]
fn rank_table_shape() {
    let v = json(&qmock(&["rank-table", "--max-n", "4", "--format", "json"]));
    let rows: Vec<_> = v
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["n"] == 4)
        .map(|r| (r["m"].as_i64().unwrap(), r["count"].as_u64().unwrap()))
        .collect();
    assert_eq!(rows, [(-3, 1), (-1, 1), (0, 1), (1, 1), (3, 1)]);
    let text = stdout(&qmock(&["rank-table", "--max-n", "4"]));
    assert!(text.lines().any(|l| l.starts_with("n=4") && l.contains("p=5")));
}

#[test]
fn catalog_listing() {
    let text = stdout(&qmock(&["catalog", "list"]));
    for name in ["psi", "R", "f", "fstar", "g3_3", "psi5"] {
        assert!(text.lines().any(|l| l.split_whitespace().next() == Some(name)), "{name} missing");
    }
    let v = json(&qmock(&["catalog", "list", "--format", "json"]));
    assert_eq!(v.as_array().unwrap().len(), 29);
}
