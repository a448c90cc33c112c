use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcenter"))
        .args(args)
        .env_remove("QCENTER_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert!(o.status.success(), "{:?}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn classify_d5() {
    let v = json(&["classify", "--type", "D", "--rank", "5"]);
    assert_eq!(v["schema"], "qcenter/1");
    assert_eq!(v["command"], "classify");
    assert_eq!(v["polynomial"], false);
    assert_eq!(v["case"], "TwoQ_plus_diamond");
    assert_eq!(v["psi_min_size"], 6);
    assert_eq!(v["relation_count"], 1);
}

#[test]
fn a2_presentation_text() {
    let o = run(&["presentation", "--type", "A", "--rank", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("x_1 x_2 = y_2^3"), "{out}");
    assert!(out.contains("complete      true"), "{out}");
}

#[test]
fn every_command_emits_the_schema_key() {
    let cases: &[&[&str]] = &[
        &["classify", "--type", "B", "--rank", "3"],
        &["lattice", "--type", "A", "--rank", "3"],
        &["hilbert-basis", "--type", "E", "--rank", "6"],
        &["presentation", "--type", "D", "--rank", "5"],
        &["orbit", "--type", "G", "--rank", "2", "--weight", "1,0"],
        &["tensor", "--type", "A", "--rank", "2", "--left", "1,0", "--right", "0,1"],
        &["character", "--type", "B", "--rank", "2", "--weight", "1,1"],
    ];
    for args in cases {
        let v = json(args);
        assert_eq!(v["schema"], "qcenter/1", "{args:?}");
        assert_eq!(v["command"], args[0], "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--json", "hilbert-basis", "--type", "A", "--rank", "5"],
        vec!["presentation", "--type", "E", "--rank", "6"],
        vec!["--json", "tensor", "--type", "B", "--rank", "2", "--left", "1,1", "--right", "2,0"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn rank_zero_is_a_validation_error() {
    let o = run(&["classify", "--type", "A", "--rank", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("rank must be ≥ 1 for family A"), "{err}");
}

#[test]
fn invalid_family_rank_pair() {
    let o = run(&["classify", "--type", "E", "--rank", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_weight_is_rejected() {
    let o = run(&["orbit", "--type", "A", "--rank", "2", "--weight", "1,x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed weight vector"));
    let o = run(&["character", "--type", "A", "--rank", "2", "--weight", "1,0,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_one() {
    let o = run(&["--budget", "10", "hilbert-basis", "--type", "E", "--rank", "6"]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stdout));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn tensor_a2_fundamentals() {
    let v = json(&["tensor", "--type", "A", "--rank", "2", "--left", "1,0", "--right", "0,1"]);
    let text = v.to_string();
    assert!(text.contains("[1,1]") && text.contains("[0,0]"), "{text}");
}

#[test]
fn verify_suite_reports_the_e6_gap() {
    let o = run(&["verify", "--suite", "paper"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let failed: Vec<&str> = out.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failed.len(), 1, "{out}");
    assert!(failed[0].contains("E6 bounded completeness"), "{out}");
}
