use std::process::{Command, Output};

use serde_json::Value;

fn afftl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_afftl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn eval_square_of_generator() {
    let o = afftl(&["eval", "--n", "4", "--word", "1 1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), r#"{"exponent":1,"word":[1]}"#);
}

#[test]
fn eval_can_include_the_diagram() {
    let o = afftl(&["eval", "--n", "4", "--word", "1 3 2 4", "--with-diagram"]);
    let v = json(&o);
    assert_eq!(v["exponent"], 0);
    assert_eq!(v["diagram"]["loops"], 1);
}

#[test]
fn afn_reports_a_value() {
    let o = afftl(&["afn", "--n", "5", "--word", "1 3 2 4"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = afftl(&["afn", "--n", "5", "--word", "1 3 2 4", "--bruteforce"]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn domain_errors_exit_one_with_json() {
    let o = afftl(&["afn", "--n", "5", "--word", "1 1"]);
    assert_eq!(o.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "precondition");
    let o = afftl(&["eval", "--n", "4", "--word", "9"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(afftl(&["eval", "--word", "1"]).status.code(), Some(2));
    assert_eq!(afftl(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        afftl(&["eval", "--n", "4", "--word", "1", "--format", "md"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn census_table() {
    let o = afftl(&["cells", "census", "--n", "4", "--max-len", "12"]);
    let rows = json(&o);
    let small1 = rows
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["two_sided"]["Small"] == 1)
        .unwrap();
    assert_eq!(small1["left_cells"], 4);
    assert_eq!(small1["right_cells"], 4);
    let o = afftl(&[
        "cells",
        "census",
        "--n",
        "5",
        "--max-len",
        "6",
        "--format",
        "md",
    ]);
    assert!(stdout(&o).contains("| Small(2) |"));
}

#[test]
fn cell_label_json() {
    let o = afftl(&["cells", "label", "--n", "5", "--word", "1 2"]);
    let v = json(&o);
    assert_eq!(v["two_sided"]["Small"], 1);
    assert_eq!(
        v["rightPattern"],
        serde_json::json!([{"left": 1, "right": 2}])
    );
    assert_eq!(
        v["leftPattern"],
        serde_json::json!([{"left": 2, "right": 3}])
    );
}

#[test]
fn involution_commands() {
    let o = afftl(&["involution", "--n", "4", "--word", "2 1 3 2"]);
    assert_eq!(json(&o), serde_json::json!({"x": [2], "t": [1, 3]}));
    let o = afftl(&[
        "involution",
        "--n",
        "4",
        "--word",
        "1 3 2 4",
        "--right-cell",
    ]);
    assert_eq!(json(&o)["marker"], "M-nonsquare cell");
    let o = afftl(&["involution", "--n", "5", "--word", "1 2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn mul_and_straighten_round_trip() {
    let x = r#"{"n":4,"terms":[{"coeff":[{"exp":0,"c":1}],"word":[1]}]}"#;
    let o = afftl(&["mul", "--left", x, "--right", x]);
    let v = json(&o);
    assert_eq!(v["terms"][0]["word"], serde_json::json!([1]));
    assert_eq!(
        v["terms"][0]["coeff"],
        serde_json::json!([{"exp": -1, "c": 1}, {"exp": 1, "c": 1}])
    );

    let o = afftl(&[
        "diagram", "--n", "5", "--word", "2 1 3 2", "--format", "json",
    ]);
    let d = stdout(&o);
    let o = afftl(&["straighten", "--diagram", d.trim()]);
    assert_eq!(json(&o)["word"], serde_json::json!([2, 1, 3, 2]));
}

#[test]
fn diagram_pictures() {
    let o = afftl(&["diagram", "--n", "4", "--word", ""]);
    assert!(stdout(&o).contains("|   |   |   |"));
    let o = afftl(&[
        "diagram", "--n", "4", "--word", "1 3 2 4", "--format", "svg",
    ]);
    let s = stdout(&o);
    assert!(s.starts_with("<svg") && s.contains("class=\"loop\""));
}

#[test]
fn enumerate_streams_records() {
    let o = afftl(&["enumerate", "--n", "3", "--max-len", "1"]);
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 4);
    assert!(lines
        .iter()
        .all(|r| r.get("isInvolution").is_some() && r.get("key").is_some()));
    let a = stdout(&afftl(&[
        "enumerate",
        "--n",
        "4",
        "--max-len",
        "4",
        "--workers",
        "1",
    ]));
    let b = stdout(&afftl(&[
        "enumerate",
        "--n",
        "4",
        "--max-len",
        "4",
        "--workers",
        "2",
    ]));
    assert_eq!(a, b);
}

#[test]
fn cap_is_read_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_afftl"))
        .args(["enumerate", "--n", "4", "--max-len", "6"])
        .env("AFFTL_MAX_ELEMENTS", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "cap_exceeded");
}

#[test]
fn verify_passes_at_small_scale() {
    let o = afftl(&["verify", "--n", "4", "--max-len", "6", "--seed", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("[PASS]")));
}
