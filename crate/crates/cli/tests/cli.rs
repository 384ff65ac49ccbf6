use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn filiform(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_filiform")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn identity_gram(n: usize) -> Value {
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    json!({ "gram": rows })
}

fn coordinate_basis(n: usize, indices: &[usize]) -> Value {
    let rows: Vec<Vec<i64>> = indices.iter().map(|&k| (1..=n).map(|i| i64::from(i == k)).collect()).collect();
    json!({ "basis": rows })
}

fn write(dir: &Path, name: &str, v: &Value) {
    fs::write(dir.join(name), v.to_string()).unwrap();
}

#[test]
fn build_then_jacobi() {
    let tmp = TempDir::new().unwrap();
    let out = filiform(&["build", "--family", "g", "--dim", "9", "--alpha", "1/2", "--out", "g9.json"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    let saved: Value = serde_json::from_str(&fs::read_to_string(tmp.path().join("g9.json")).unwrap()).unwrap();
    assert_eq!(saved["v"], "v1");
    assert_eq!(saved["dim"], 9);
    let out = filiform(&["jacobi", "g9.json"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["verdict"], true);
}

#[test]
fn restriction_is_an_input_error() {
    let tmp = TempDir::new().unwrap();
    let out = filiform(&["build", "--family", "g", "--dim", "7", "--alpha", "-2"], tmp.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("α ≠ -2"));
}

#[test]
fn usage_errors_exit_2() {
    let tmp = TempDir::new().unwrap();
    assert_eq!(filiform(&["no-such-verb"], tmp.path()).status.code(), Some(2));
    assert_eq!(filiform(&["build", "--family", "m0"], tmp.path()).status.code(), Some(2));
    assert_eq!(
        filiform(&["build", "--family", "m0", "--dim", "6", "--alpha", "x/y"], tmp.path()).status.code(),
        Some(2)
    );
    assert_eq!(filiform(&["jacobi", "missing.json"], tmp.path()).status.code(), Some(2));
    assert_eq!(
        filiform(&["kernel-k", "--k", "3", "--a", "0", "--b", "0", "--c", "0"], tmp.path()).status.code(),
        Some(2)
    );
}

#[test]
fn broken_jacobi_is_a_negative_verdict() {
    let tmp = TempDir::new().unwrap();
    let alg = json!({
        "dim": 5, "scalar": "rational", "graded": true,
        "brackets": [
            {"i": 1, "j": 2, "value": ["0", "0", "1", "0", "0"]},
            {"i": 1, "j": 3, "value": ["0", "0", "0", "1", "0"]},
            {"i": 1, "j": 4, "value": ["0", "0", "0", "0", "1"]},
            {"i": 2, "j": 3, "value": ["0", "0", "0", "1", "0"]},
        ],
    });
    write(tmp.path(), "bad.json", &alg);
    let out = filiform(&["jacobi", "bad.json"], tmp.path());
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["violation"]["triple"], json!([1, 2, 3]));
    assert_eq!(report["violation"]["residual"], json!(["0", "0", "0", "0", "1"]));
}

#[test]
fn tgs_check_verdicts() {
    let tmp = TempDir::new().unwrap();
    assert_eq!(
        filiform(&["build", "--family", "m0", "--dim", "6", "--out", "m0.json"], tmp.path()).status.code(),
        Some(0)
    );
    write(tmp.path(), "ip.json", &identity_gram(6));
    write(tmp.path(), "even.json", &coordinate_basis(6, &[2, 4, 6]));
    write(tmp.path(), "top.json", &coordinate_basis(6, &[5, 6]));
    let out = filiform(&["tgs-check", "m0.json", "ip.json", "even.json"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["verdict"], true);
    let out = filiform(&["tgs-check", "m0.json", "ip.json", "top.json"], tmp.path());
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["verdict"], false);
    assert_eq!(report["witness"]["residual"], "1");
}

#[test]
fn search_and_adapted_basis() {
    let tmp = TempDir::new().unwrap();
    filiform(&["build", "--family", "m01", "--dim", "7", "--out", "m01.json"], tmp.path());
    let out = filiform(&["search-graded", "m01.json"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["max_dim"], 3);
    assert!(report["best"].as_array().unwrap().contains(&json!([2, 4, 6])));
    assert_eq!(filiform(&["search-graded", "m01.json", "--cap", "5"], tmp.path()).status.code(), Some(2));
    let out = filiform(&["adapted-basis", "m01.json"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["basis"].as_array().unwrap().len(), 7);
}

#[test]
fn construct_m01_writes_certified_files() {
    let tmp = TempDir::new().unwrap();
    let out = filiform(&["construct-m01", "--k", "3", "--out", "run"], tmp.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let dir = tmp.path().join("run");
    for f in ["algebra.json", "subalgebra.json", "witness.json", "report.json"] {
        let v: Value = serde_json::from_str(&fs::read_to_string(dir.join(f)).unwrap()).unwrap();
        assert_eq!(v["v"], "v1", "{f}");
    }
    let report: Value = serde_json::from_str(&fs::read_to_string(dir.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["certified"], true);
    write(tmp.path(), "ip.json", &identity_gram(7));
    let out = filiform(&["tgs-check", "run/algebra.json", "ip.json", "run/subalgebra.json"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["codim"], 4);
    let out = filiform(&["construct-m01", "--k", "3", "--magnitudes", "2,2", "--out", "x"], tmp.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kernel_k_report() {
    let tmp = TempDir::new().unwrap();
    let out = filiform(&["kernel-k", "--k", "3", "--a", "0", "--b", "1", "--c", "0"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["formula"], json!(["0", "0", "2", "0", "0"]));
    assert_eq!(report["nullspace"], json!([["0", "0", "1", "0", "0"]]));
    assert_eq!(report["proportionality"], "2");
}

#[test]
fn quotient_and_iso_checks() {
    let tmp = TempDir::new().unwrap();
    let out = filiform(&["quotient-check", "--family", "g", "--dim", "8", "--alpha", "1", "--target", "g"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["match"], "exact");
    let out = filiform(
        &["quotient-check", "--family", "g", "--dim", "8", "--alpha", "1", "--target", "g", "--target-alpha", "2"],
        tmp.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["match"], "mismatch");
    let out = filiform(&["iso-check", "--family", "g", "--dim", "9", "--alpha", "8"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["target"]["family"], "V");

    filiform(&["build", "--family", "m0", "--dim", "5", "--out", "a.json"], tmp.path());
    filiform(&["build", "--family", "m2", "--dim", "5", "--out", "b.json"], tmp.path());
    let id: Vec<Vec<i64>> = (0..5).map(|i| (0..5).map(|j| i64::from(i == j)).collect()).collect();
    write(tmp.path(), "id.json", &json!({ "map": id }));
    let out = filiform(&["iso-check", "a.json", "a.json", "id.json"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    let out = filiform(&["iso-check", "a.json", "b.json", "id.json"], tmp.path());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["pair"], json!([2, 3]));
}

#[test]
fn reports_are_deterministic() {
    let tmp = TempDir::new().unwrap();
    filiform(&["build", "--family", "V", "--dim", "8", "--out", "v.json"], tmp.path());
    let a = filiform(&["search-graded", "v.json", "--threads", "1"], tmp.path());
    let b = filiform(&["search-graded", "v.json", "--threads", "4"], tmp.path());
    assert_eq!(a.stdout, b.stdout);
    let c = filiform(&["build", "--family", "g", "--dim", "11", "--alpha", "-3/7"], tmp.path());
    let d = filiform(&["build", "--family", "g", "--dim", "11", "--alpha", "-3/7"], tmp.path());
    assert_eq!(c.stdout, d.stdout);
}
