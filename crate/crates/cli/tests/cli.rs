use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ilambda"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn eval_and_congruence_examples() {
    assert_eq!(stdout(&["eval", "{1>2,2>1} * {1>2,2>1}"]), "id");
    assert_eq!(stdout(&["eval", "{1>3,-3} * {3>1,-1}"]), "{-3}");
    assert_eq!(stdout(&["cong", "principal", "id", "{1>2,2>1}"]), "S:0");
    assert_eq!(
        stdout(&["cong", "related", "A:0", "id", "{1>2,2>1}"]),
        "false"
    );
    assert_eq!(stdout(&["green", "D", "{-1}", "{-2}"]), "true");
    assert_eq!(json(&["eval", "inv({1>3,-3})"])["result"], "{3>1, -1}");
}

#[test]
fn solvers_and_enumeration() {
    let v = json(&["solve", "left", "{-1}", "{-1}"]);
    assert_eq!(v["count"], 2);
    assert_eq!(json(&["enum", "--window", "3"])["count"], 34);
    assert_eq!(stdout(&["enum", "--window", "1"]).lines().count(), 2);
}

#[test]
fn neighbourhood_queries() {
    assert_eq!(
        stdout(&["nbhd", "--flavor", "F", "member", "id", "{3}", "{1>2,2>1}"]),
        "true"
    );
    assert_eq!(
        stdout(&["nbhd", "--flavor", "F", "separate", "id", "{1>2,2>1}"]),
        "{1} {1}"
    );
    let v = json(&[
        "nbhd", "--flavor", "WF", "disjoint", "id", "{2}", "{-1}", "{2}",
    ]);
    assert_eq!(v["disjoint"], false);
    assert!(v["common_member"].is_string());
    assert_eq!(
        stdout(&[
            "nbhd",
            "--flavor",
            "F",
            "witness",
            "continuity",
            "{1>3,-3}",
            "{3>1,-1}",
            "{1}"
        ]),
        "{1} {3}"
    );
}

#[test]
fn verify_reports_and_exits_zero() {
    let out = stdout(&["verify", "--window", "2"]);
    assert!(out.ends_with("0 failed"), "{out}");
    let v = json(&["verify", "--window", "1", "--suite", "green"]);
    assert_eq!(v["elements"], 2);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn domain_errors_exit_one() {
    let out = run(&["eval", "{1>2}"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("TargetIsFixed"));

    let out = run(&[
        "--json",
        "nbhd",
        "--flavor",
        "WF",
        "witness",
        "inversion",
        "{-1}",
        "{}",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "InversionDiscontinuous");
    assert!(err["message"]
        .as_str()
        .unwrap()
        .contains("leaves every neighbourhood"));

    let out = run(&["verify", "--window", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("WindowTooLarge"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["green", "Q", "id", "id"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(
        run(&["nbhd", "--flavor", "X", "separate", "id", "{-1}"])
            .status
            .code(),
        Some(2)
    );
}
