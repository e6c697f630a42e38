use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run_in(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bkschubert"))
        .args(args)
        .env("BKSCHUBERT_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn terms(v: &Value) -> Vec<(String, i64)> {
    v["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["w"].as_str().unwrap().to_string(), t["coeff"].as_i64().unwrap()))
        .collect()
}

#[test]
fn roots_reports_positive_roots() {
    let v = json(&["roots", "B", "3"]);
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 9);
    assert_eq!(v["weyl_order"], "48");
}

#[test]
fn grassmannian_square_of_the_divisor() {
    let v = json(&["product", "A", "3", "--dp", "2", "--basis", "sigma", "--u", "s2", "--v", "s2"]);
    assert_eq!(terms(&v), vec![("s1s2".into(), 1), ("s3s2".into(), 1)]);
}

#[test]
fn bk_equals_cup_on_a_grassmannian() {
    for (u, v) in [("s2", "s1s2"), ("s2", "s2"), ("s1s2", "s3s2"), ("s3s1s2", "s2")] {
        let args = |mode| ["product", "A", "3", "--dp", "2", "--basis", "sigma", "--u", u, "--v", v, "--mode", mode];
        assert_eq!(terms(&json(&args("cup"))), terms(&json(&args("bk"))), "{u} {v}");
    }
}

#[test]
fn unit_is_neutral() {
    let v = json(&["product", "A", "3", "--u", "s1s2s3s1s2s1", "--v", "s2s1"]);
    assert_eq!(terms(&v), vec![("s2s1".into(), 1)]);
}

#[test]
fn full_flag_bk_product_of_divisors_vanishes() {
    let cup = json(&["product", "A", "2", "--basis", "sigma", "--u", "s1", "--v", "s2"]);
    assert_eq!(terms(&cup).len(), 2);
    let bk = json(&["product", "A", "2", "--basis", "sigma", "--u", "s1", "--v", "s2", "--mode", "bk"]);
    assert!(terms(&bk).is_empty());
}

#[test]
fn deformed_product_carries_tau_exponents() {
    let v = json(&["product", "A", "2", "--basis", "sigma", "--mode", "tau", "--u", "s1", "--v", "s2"]);
    for t in v["result"].as_array().unwrap() {
        assert_eq!(t["tau"], 1);
    }
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        vec!["roots", "Q", "2"],
        vec!["product", "A", "3", "--dp", "2", "--u", "s1", "--v", "s1"],
        vec!["product", "A", "3", "--u", "s7", "--v", "e"],
        vec!["weyl", "A", "3", "--dp", "5"],
        vec!["weyl", "A", "3", "--lambda", "1,x,0"],
        vec!["eigencone", "check", "--diagonal", "A", "1", "--point", "1,2"],
        vec!["eigencone", "check", "--diagonal", "A", "1", "--point", "-1,0,0"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn unsupported_requests_exit_3() {
    for args in [
        vec!["roots", "A", "12"],
        vec!["branch", "tensor", "--n", "4", "--k", "1", "--l", "1"],
    ] {
        assert_eq!(run(&args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn eigencone_for_sl2_has_three_inequalities() {
    let v = json(&["eigencone", "generate", "--diagonal", "A", "1"]);
    assert_eq!(v["inequalities"].as_array().unwrap().len(), 3);
    let o = run(&["eigencone", "check", "--diagonal", "A", "1", "--point", "0,0,0"]);
    assert_eq!(stdout(&o).trim(), "inside (all tight)");
    let o = run(&["eigencone", "check", "--diagonal", "A", "1", "--point", "3,1,1"]);
    assert!(stdout(&o).starts_with("outside"));
    let o = run(&["eigencone", "check", "--diagonal", "A", "1", "--point", "1/2,1/2,0"]);
    assert!(stdout(&o).starts_with("inside"));
}

#[test]
fn levi_tests_agree() {
    let v = json(&["levi", "A", "2", "--u", "s1s2", "--v", "s2s1", "--w-tilde", "s1"]);
    assert_eq!(v["d"], 1);
    assert_eq!(v["char"], v["dim"]);
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "eigencone", "generate", "--diagonal", "A", "2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["branch", "oddorth"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn json_has_sorted_keys() {
    let o = run(&["--format", "json", "roots", "A", "2"]);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap(), text.trim_end());
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn cache_build_info_clear() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(dir.path(), &["cache", "build", "A", "3", "--dp", "2"]);
    assert!(stdout(&o).contains("written"));
    let o = run_in(dir.path(), &["cache", "build", "A", "3", "--dp", "2"]);
    assert!(stdout(&o).contains("already cached"));
    let o = run_in(dir.path(), &["--format", "json", "cache", "info"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["valid"], true);
    run_in(dir.path(), &["cache", "clear"]);
    let o = run_in(dir.path(), &["--format", "json", "cache", "info"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["entries"].as_array().unwrap().is_empty());
}

#[test]
fn product_fills_the_cache_unless_told_not_to() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["product", "A", "2", "--u", "e", "--v", "e", "--no-cache"]);
    assert_eq!(std::fs::read_dir(dir.path()).map(|d| d.count()).unwrap_or(0), 0);
    run_in(dir.path(), &["product", "A", "2", "--u", "e", "--v", "e"]);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn examples_flag_only_the_odd_orthogonal_chi_values() {
    let o = run(&["--format", "json", "examples"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["check"].as_str().unwrap())
        .collect();
    assert_eq!(failed, vec!["χ̃ of w̃1 at λ̇", "χ̃ of w̃2 at λ̇", "χ̃ of w̃3 at λ̇"]);
}
