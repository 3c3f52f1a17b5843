use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degenq")).args(args).env_remove("DEGENQ_MAX_DIM").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn trefoil_json() {
    let o = run(&["invariant", "--m", "3", "--n", "1", "--braid", "1 1 1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for k in ["m", "n", "strands", "writhe", "markov_trace", "invariant", "a", "z"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    assert_eq!(v["writhe"], 3);
    assert_eq!(v["strands"], 2);
    assert_eq!(v["a"], "q^2");
    assert_eq!(v["z"], "q - q^-1");
    assert_eq!(v["invariant"], "q^-2 + q^-6 - q^-8");
}

#[test]
fn explicit_strands() {
    let o = run(&["invariant", "--m", "2", "--n", "1", "--braid", "1", "--strands", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["strands"], 3);
    // two components: the unlink factor at a = q is 1
    assert_eq!(v["invariant"], "1");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["invariant", "--m", "2", "--n", "2", "--braid", "1"]).status.code(), Some(2));
    assert_eq!(run(&["invariant", "--m", "3", "--n", "2", "--braid", "1 2 3 4 5 6"]).status.code(), Some(3));
    assert_eq!(run(&["invariant", "--m", "2", "--n", "1", "--braid", "0"]).status.code(), Some(1));
    assert_eq!(run(&["invariant", "--m", "2", "--n", "1", "--braid", "2", "--strands", "2"]).status.code(), Some(1));
    assert_eq!(run(&["invariant", "--m", "2", "--n", "1", "--braid", "1", "--bogus"]).status.code(), Some(1));
    assert_eq!(run(&["eval", "--m", "2", "--n", "1", "--expr", "e1", "--rep", "tensor10"]).status.code(), Some(3));
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_degenq"))
        .args(["invariant", "--m", "2", "--n", "1", "--braid", "1 1"])
        .env("DEGENQ_MAX_DIM", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["invariant", "--m", "2", "--n", "1", "--braid", "1 1", "--max-dim", "9"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify", "--m", "2", "--n", "1", "--tensor-depth", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().lines().last().unwrap().starts_with("OK ("));
}

#[test]
fn verify_equal_m_n_marks_invariant_unsupported() {
    let o = run(&["verify", "--m", "2", "--n", "2", "--suite", "invariant", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["counts"]["unsupported"], 2);
    assert_eq!(v["counts"]["fail"], 0);
}

#[test]
fn verify_one_one_reports_vacuous_entries() {
    let o = run(&["verify", "--m", "1", "--n", "1", "--suite", "relations"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("vacuous"));
}

#[test]
fn simple_module_text_and_json() {
    let o = run(&["simple-module", "--ell", "0", "--sign1", "+1", "--lambda2", "q^-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("v, f2 v, F v"));
    let o = run(&["simple-module", "--ell", "2", "--sign1", "-1", "--lambda2", "q^3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 12);
    assert_eq!(v["type"], "Typical");
    assert_eq!(v["relations_passed"], true);
    assert!(v["action"]["e1"]["entries"].is_array());
}

#[test]
fn decompose_reports_dimensions() {
    let o = run(&["decompose", "--m", "3", "--n", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["eigenvalue q"], 13);
    assert_eq!(v["eigenvalue -q^-1"], 12);
}

#[test]
fn eval_in_natural_module() {
    let o = run(&["eval", "--m", "2", "--n", "1", "--expr", "e2*e2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["matrix"]["entries"].as_array().unwrap().len(), 0);
    let o = run(&["eval", "--m", "2", "--n", "1", "--expr", "e1"]);
    assert!(stdout(&o).contains("(0, 1)  1"));
}
