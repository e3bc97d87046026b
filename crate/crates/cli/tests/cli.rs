use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paulidecomp"))
        .args(args)
        .env_remove("PAULIDECOMP_CAP_OVERRIDE")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn build_reports_orders() {
    let r = json(&["build", "pauli:p=2,n=1"]);
    assert_eq!(r["order"], 16);
    assert_eq!(r["center_order"], 4);
    assert_eq!(json(&["build", "heis:R=gf(3),n=1"])["order"], 27);
    assert_eq!(json(&["build", "trivial"])["order"], 1);
}

#[test]
fn bad_spec_exits_2() {
    for spec in ["pauli:p=4", "nonsense", "heis:R=gf(6)"] {
        assert_eq!(run(&["build", spec]).status.code(), Some(2), "{spec}");
    }
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm9.9"]).status.code(), Some(2));
    assert_eq!(run(&["build", "d8", "--format", "dot"]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_3() {
    assert_eq!(run(&["build", "pauli:p=2,n=2", "--cap-closure", "10"]).status.code(), Some(3));
}

#[test]
fn cap_flags_override_the_environment() {
    let base = || {
        let mut c = Command::new(env!("CARGO_BIN_EXE_paulidecomp"));
        c.args(["build", "pauli:p=2,n=1"]).env("PAULIDECOMP_CAP_OVERRIDE", "closure=10");
        c
    };
    assert_eq!(base().output().unwrap().status.code(), Some(3));
    assert!(base().args(["--cap-closure", "100"]).output().unwrap().status.success());
}

#[test]
fn census_and_lattice_of_d8() {
    assert_eq!(json(&["census", "d8"])["c_ab"], 8);
    let out = run(&["lattice", "d8", "--format", "dot"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 15);
    let l = json(&["lattice", "d8", "--filter", "paper-figure"]);
    assert_eq!(l["nodes"].as_array().unwrap().len(), 10);
}

#[test]
fn decompose_two_qubits_has_a_z4_link() {
    let r = json(&["decompose", "pauli:p=2,n=2"]);
    let link = &r["decomposition"]["links"][0]["link"];
    assert_eq!(link["order"], 4);
    assert_eq!(link["identified"], "Z4");
}

#[test]
fn verify_single_claim_and_refutation_exit_zero() {
    let r = json(&["verify", "lemma3.1"]);
    assert_eq!(r["claims"][0]["status"], "confirmed");
    assert!(r["claims"][0]["wall_time_ms"].is_u64());
    let r = json(&["verify", "cor5.4"]);
    assert_eq!(r["claims"][0]["status"], "refuted_at_desk_scale");
    assert!(r["claims"][0]["witness"]["P(2,3)"]["minimal_nonabelian"]["evidence"].is_object());
}

#[test]
fn output_is_reproducible_and_written_atomically() {
    let dir = std::env::temp_dir().join(format!("paulidecomp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("verify.json");
    let args = ["verify", "eq19", "--no-timings"];
    let a = run(&args).stdout;
    let b = run(&args).stdout;
    assert_eq!(a, b);
    let out = run(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn lifted_subcommand() {
    let r = json(&["lifted", "p=3,m=2,n=1"]);
    assert_eq!(r["claim_id"], "cor5.2");
    assert_eq!(r["status"], "confirmed");
    assert_eq!(run(&["lifted", "p=3,k=1"]).status.code(), Some(2));
}

#[test]
fn help_documents_the_grammar() {
    let out = run(&["--help"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("heis-param"));
}
