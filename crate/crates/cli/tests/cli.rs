use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn ncfit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncfit"))
        .arg("--no-timestamp")
        .args(args)
        .env_remove("NCALG_BUDGET")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn nrd_from_request_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // 1 + s over S3, s a transposition
    write!(f, r#"{{"group": "S3", "entries": [[{{"0": "1", "3": "1"}}]]}}"#).unwrap();
    let path = format!("@{}", f.path().display());
    let out = ncfit(&["nrd", "--group", "S3", "--matrix", &path]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema_version"], 1);
    assert!(r.get("timestamp").is_none());
    let values = r["result"]["nrd"]["values"].as_array().unwrap();
    assert_eq!(values.len(), 3);
}

#[test]
fn unknown_group_and_suite_are_usage_errors() {
    assert_eq!(ncfit(&["group", "--name", "NoSuchGroup"]).status.code(), Some(2));
    assert_eq!(ncfit(&["suite", "--name", "nope"]).status.code(), Some(2));
    assert_eq!(ncfit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ncfit(&["nrd", "--group", "S3", "--matrix", "[[{\"9\": \"1\"}]]"]).status.code(), Some(2));
}

#[test]
fn group_description() {
    let out = ncfit(&["group", "--name", "D", "--params", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["order"], 8);
    assert_eq!(r["result"]["irreps"].as_array().unwrap().len(), 5);
}

#[test]
fn cyclo_family_passes_and_flipped_guard_fails() {
    let out = ncfit(&["cyclo", "--fmax", "30", "--ellmax", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["all_pass"], true);
    let rows = r["result"]["rows"].as_array().unwrap();
    assert!(rows.iter().all(|row| row["verdict"] == "pass"));
    for key in ["f", "ell", "lhs", "rhs", "verdict"] {
        assert!(rows[0].get(key).is_some());
    }
    assert_eq!(ncfit(&["cyclo", "--fmax", "30", "--ellmax", "13", "--flipped"]).status.code(), Some(1));
}

#[test]
fn suite_reports_are_reproducible() {
    let args = ["suite", "--name", "pairing", "--seed", "7", "--cases", "10"];
    let a = ncfit(&args);
    let b = ncfit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = report(&a);
    assert_eq!(r["seed"], 7);
    assert_eq!(r["result"]["suites"][0]["checks"][0]["cases"], 10);
}

#[test]
fn suite_oracle_and_all() {
    let out = ncfit(&["suite", "--name", "oracle", "--seed", "7", "--cases", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["suites"][0]["checks"][0]["passed"], 20);
    let out = ncfit(&["suite", "--name", "all", "--seed", "1", "--cases", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["suites"].as_array().unwrap().len(), 10);
}

#[test]
fn epsilon_of_trivial_group_column() {
    let out = ncfit(&["epsilon", "--group", "C1", "--matrix", "[[[2]], [[3]]]"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let coords = &r["result"]["epsilon"]["components"][0]["coords"];
    assert_eq!(coords[0]["coeffs"][0], "3/1");
    assert_eq!(coords[1]["coeffs"][0], "-2/1");
    assert_eq!(r["result"]["in_kernel"], true);
}

#[test]
fn fit_agrees_with_classical_oracle() {
    let out = ncfit(&["fit", "--group", "C4", "--matrix", "[[[2, 1, 0, 0]], [[0, 0, 1, 3]]]", "--a", "0", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["agree"], true);
}

#[test]
fn rubin_rejects_fractional_wedge() {
    let basis = "[[[1,0,0],[0,0,0]],[[0,0,0],[1,0,0]]]";
    let out = ncfit(&["rubin", "--group", "C3", "--k", "2", "--elements", basis, "--lattice", basis, "--scale", "{\"0\": \"1/3\"}"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["rubin"]["verdict"], "certified-no");
    let out = ncfit(&["rubin", "--group", "C3", "--k", "2", "--elements", basis, "--lattice", basis]);
    assert_eq!(report(&out)["result"]["rubin"]["verdict"], "exact-yes");
}

#[test]
fn annihilation_and_budget_env() {
    let out = ncfit(&["annihilate", "--group", "C2", "--matrix", "[[[2, 1]]]", "--x", "{\"0\": \"2\"}"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["cokernel"][0], "3");
    let out = Command::new(env!("CARGO_BIN_EXE_ncfit"))
        .args(["--no-timestamp", "xi", "--group", "S3"])
        .env("NCALG_BUDGET", "{\"rounds\": 1, \"max_size\": 1}")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_ncfit"))
        .args(["xi", "--group", "S3"])
        .env("NCALG_BUDGET", "not json")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn det_of_split_sequence() {
    let theta = "[[[1,0],[0,0]]]";
    let phi = "[[[0,0]],[[1,0]]]";
    let section = "[[[0,0],[1,0]]]";
    let out = ncfit(&["det", "--group", "C2", "--theta", theta, "--phi", phi, "--section", section]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["order_swap_commutes"], true);
    assert_eq!(r["result"]["image"]["grading"], serde_json::json!([2, 2]));
}
