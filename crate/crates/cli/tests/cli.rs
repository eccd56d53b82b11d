use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descent")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn desc_prints_the_composition_first() {
    let s = stdout(&["desc", "9 -3 -2 -1 -4 5 8 -6 7"]);
    assert_eq!(s.lines().next(), Some("1,-3,-1,2,-1,1"));
}

#[test]
fn comps_lists_six_for_two() {
    assert_eq!(stdout(&["comps", "2"]).lines().count(), 6);
    let v: Value = serde_json::from_str(&stdout(&["comps", "3", "--json"])).unwrap();
    assert_eq!(v["count"], 18);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["desc", "1 3"]).status.code(), Some(2));
    assert_eq!(run(&["xset", "2", "1,-3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["chartable", "5"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "hopf", "5"]).status.code(), Some(3));
    let v: Value = serde_json::from_slice(&run(&["verify", "hopf", "5", "--json"]).stdout).unwrap();
    assert_eq!(v["exit"], 3);
}

#[test]
fn output_is_deterministic() {
    for args in [&["coplactic", "3"][..], &["mult", "3", "1,-2", "-1,2"], &["ch", "3", "2|1"], &["verify", "all", "2"]] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn x_and_y_coordinates_have_equal_augmentation() {
    // |X_C| |X_D| = Σ_E a_E |X_E| = Σ_E b_E |Y_E|.
    let v: Value = serde_json::from_str(&stdout(&["mult", "2", "1,1", "-2", "--json"])).unwrap();
    let size = |set: &str, comp: &str| -> i64 {
        let v: Value = serde_json::from_str(&stdout(&[set, "2", comp, "--json"])).unwrap();
        v["count"].as_i64().unwrap()
    };
    let total = |basis: &str, set: &str| -> i64 {
        v[basis].as_array().unwrap().iter().map(|t| t["coeff"].as_str().unwrap().parse::<i64>().unwrap() * size(set, t["comp"].as_str().unwrap())).sum()
    };
    assert_eq!(total("x", "xset"), 8);
    assert_eq!(total("y", "yset"), 8);
}

#[test]
fn csv_output_has_a_header() {
    let s = stdout(&["yset", "2", "-1,1", "--csv"]);
    assert_eq!(s.lines().collect::<Vec<_>>(), ["window", "-2 1", "-1 2"]);
}

#[test]
fn hopf_terms_use_the_tensor_format() {
    let s = stdout(&["hopf", "coprod", "2 1"]);
    assert!(s.lines().all(|l| l.starts_with('(') && l.contains(" ⊗ ") && l.ends_with(" : 1")), "{s}");
    assert_eq!(stdout(&["hopf", "prod", "", "1"]), "1 : 1\n");
}

#[test]
fn verify_reports_each_label() {
    let v: Value = serde_json::from_str(&stdout(&["verify", "all", "2", "--json"])).unwrap();
    assert_eq!(v["passed"], true);
    let suites: std::collections::BTreeSet<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["suite"].as_str().unwrap()).collect();
    assert_eq!(suites.len(), 7);
}
