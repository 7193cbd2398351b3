use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use y5::geometry::standard_a_basis;

fn y5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_y5")).args(args).output().expect("run y5")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("y5-cli");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn sample_to(name: &str, args: &[&str]) -> String {
    let path = scratch(name);
    let p = path.to_str().unwrap().to_string();
    let mut full = vec!["sample"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &p]);
    let o = y5(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn foundations_pass() {
    let o = y5(&["foundations", "--budget", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["h0_OY1"], 7);
}

#[test]
fn corrupted_basis_is_rejected() {
    let mut basis = standard_a_basis();
    let mut m = y5::RatMatrix::zeros(5, 5);
    m[(0, 1)] = y5::rat(1);
    m[(1, 0)] = y5::rat(-1);
    basis[0] = m;
    let text = serde_json::to_string(&basis.iter().map(|b| b.to_strings()).collect::<Vec<_>>()).unwrap();
    let path = scratch("rank2_basis.json");
    fs::write(&path, text).unwrap();
    let o = y5(&["foundations", "--a-basis", path.to_str().unwrap(), "--budget", "10"]);
    assert_ne!(o.status.code(), Some(0));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("rank-4"), "stderr: {err}");
}

#[test]
fn sample_and_analyze_are_deterministic() {
    let a = y5(&["sample", "-n", "2", "--seed", "11"]);
    let b = y5(&["sample", "-n", "2", "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let file = sample_to("det2.json", &["-n", "2", "--seed", "11"]);
    let saved: Value = serde_json::from_str(&fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(saved["gamma"], json(&a)["gamma"]);
    let x = y5(&["analyze", &file, "--seed", "3"]);
    let y = y5(&["analyze", &file, "--seed", "3"]);
    assert_eq!(x.status.code(), Some(0), "{}", String::from_utf8_lossy(&x.stderr));
    assert_eq!(x.stdout, y.stdout);
}

#[test]
fn special_sample_is_special() {
    let file = sample_to("special.json", &["-n", "3", "--special", "--line", "1,2,-1", "--seed", "5"]);
    let o = y5(&["analyze", &file]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let j = json(&o);
    assert_eq!(j["special"], true);
}

#[test]
fn equivariant_conic_is_the_discriminant() {
    let file = sample_to("equivariant.json", &["-n", "2", "--equivariant"]);
    let o = y5(&["analyze", &file]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["F_conic_is_q"], true);
}

#[test]
fn restrict_line_reports_splitting() {
    let file = sample_to("restrict.json", &["-n", "2", "--seed", "2"]);
    let o = y5(&["restrict", &file, "--line", "1,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["agrees_with_corank"], true);
}

#[test]
fn malformed_input_is_a_usage_error() {
    let path = scratch("bad.json");
    fs::write(&path, "{ \"charge\": 2, \"gamma\": [ ").unwrap();
    let o = y5(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = y5(&["analyze", "/nonexistent/monad.json"]);
    assert_eq!(o.status.code(), Some(2));

    let o = y5(&["sample", "-n", "2", "--height", "0"]);
    assert_ne!(o.status.code(), Some(0));

    let o = y5(&["sample", "-n", "5"]);
    assert_eq!(o.status.code(), Some(2));
}
