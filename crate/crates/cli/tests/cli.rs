use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/../core/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn gkm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkm")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn crystal_on_a1() {
    let a1 = fixture("a1");
    let out = gkm(&["crystal", "--datum", &a1, "--weight", "lam2", "--depth", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);

    let out = gkm(&["crystal", "--datum", &a1, "--weight", "lam2", "--depth", "0"]);
    assert_eq!(json_of(&out)["nodes"].as_array().unwrap().len(), 1);
}

#[test]
fn output_is_deterministic() {
    let mixed = fixture("mixed");
    let args = ["crystal", "--datum", &mixed, "--weight", "lam11", "--depth", "4"];
    assert_eq!(gkm(&args).stdout, gkm(&args).stdout);
}

#[test]
fn input_errors_exit_2_with_json_diagnostic() {
    let a1 = fixture("a1");
    let out = gkm(&["crystal", "--datum", &a1, "--weight", "nope", "--depth", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["exit_code"], 2);
    let out = gkm(&["crystal", "--datum", "/nonexistent.json", "--weight", "lam2", "--depth", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(gkm(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn demazure_character_commands() {
    let mixed = fixture("mixed");
    let out = gkm(&["demazure-char", "--datum", &mixed, "--weight", "lam01", "--word", "r1 r2", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["character"].as_array().unwrap().len(), 3);
    assert_eq!(v["verified"], true);

    let out = gkm(&["demazure-char", "--datum", &mixed, "--weight", "lam01", "--word", ""]);
    let v = json_of(&out);
    assert_eq!(v["character"].as_array().unwrap().len(), 1);

    let out = gkm(&["demazure-crystal", "--datum", &mixed, "--weight", "lam01", "--word", "r1 r2^2"]);
    assert_eq!(json_of(&out)["size"], 6);
}

#[test]
fn admissibility_failure_exits_3() {
    let mixed = fixture("mixed");
    let out = gkm(&["demazure-char", "--datum", &mixed, "--weight", "lam02", "--word", "r2"]);
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].as_str().unwrap().contains("condition (4)"));
}

#[test]
fn budget_exit_5() {
    let mixed = fixture("mixed");
    let out = gkm(&["crystal", "--datum", &mixed, "--weight", "lam01", "--depth", "50", "--node-budget", "20"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn tensor_a1() {
    let a1 = fixture("a1");
    let out = gkm(&["tensor", "--datum", &a1, "--left", "lam2", "--right", "lam2", "--depth", "6", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["components"].as_array().unwrap().len(), 3);
    assert_eq!(v["verified"], true);
}

#[test]
fn branch_to_empty_subset_lists_every_node() {
    let mixed = fixture("mixed");
    let out = gkm(&["branch", "--datum", &mixed, "--weight", "lam01", "--levi", "", "--depth", "3"]);
    let comps = json_of(&out)["components"].as_array().unwrap().clone();
    let total: u64 = comps.iter().map(|c| c["multiplicity"].as_u64().unwrap()).sum();
    let crystal = gkm(&["crystal", "--datum", &mixed, "--weight", "lam01", "--depth", "3"]);
    assert_eq!(total as usize, json_of(&crystal)["nodes"].as_array().unwrap().len());
}

#[test]
fn prv_non_example() {
    let mixed = fixture("mixed");
    let out = gkm(&[
        "prv", "--datum", &mixed, "--left", "lam10", "--right", "lam01", "--right-word", "r2", "--depth", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["nu_bar_dominant"], false);
    assert!(v["note"].as_str().unwrap().contains("counterexample reproduced"));
}

#[test]
fn verify_suites_pass() {
    for suite in ["paper-examples", "thm4", "shadow"] {
        let out = gkm(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        assert_eq!(json_of(&out)["passed"], true);
    }
}

#[test]
fn text_format() {
    let a1 = fixture("a1");
    let out = gkm(&["char", "--datum", &a1, "--weight", "lam2", "--depth", "5", "--format", "text"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("e^(lam2)"));
}
