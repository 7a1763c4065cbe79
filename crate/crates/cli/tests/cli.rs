use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn ordsemi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordsemi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn gens_file(name: &str, body: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const TWO_THREE: &str = r#"{"kind":"finite","elements":["2","3"]}"#;

#[test]
fn enumerate_naturals() {
    let gens = gens_file("two_three.json", TWO_THREE);
    let out = ordsemi(&[
        "enumerate",
        "--instance",
        "additive_naturals",
        "--gens",
        gens.to_str().unwrap(),
        "--k",
        "5",
    ]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    let values: Vec<&str> = rows.iter().map(|r| r["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["2", "3", "4", "5", "6"]);
    assert_eq!(rows[3]["witness"], serde_json::json!(["2", "3"]));
    assert_eq!(rows[3]["fiber_size"], 2);
}

#[test]
fn enumerate_csv_and_up_to() {
    let out = ordsemi(&[
        "enumerate",
        "--instance",
        r#"{"instance":"additive_naturals"}"#,
        "--gens",
        TWO_THREE,
        "--up-to",
        "5",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "value,witness,fiber_size\n2,(2),1\n3,(3),1\n4,\"(2, 2)\",1\n5,\"(2, 3)\",2\n"
    );
}

#[test]
fn enumerate_stream_reports_truncation() {
    let out = ordsemi(&[
        "enumerate",
        "--instance",
        "additive_rationals",
        "--gens",
        r#"{"kind":"stream","family":"n_over_n_plus_1"}"#,
        "--up-to",
        "1",
        "--budget",
        "20",
    ]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows[0]["value"], "1/2");
    assert_eq!(rows[2]["value"], "3/4");
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget exhausted"));
}

#[test]
fn fiber_with_multiset_count() {
    let out = ordsemi(&[
        "fiber",
        "--instance",
        "additive_naturals",
        "--gens",
        TWO_THREE,
        "--target",
        "7",
        "--multiset",
    ]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 3);
    assert!(rows
        .iter()
        .all(|r| r["fiber_size"] == 3 && r["multiset_count"] == 1));
    assert_eq!(rows[2]["witness"], serde_json::json!(["3", "2", "2"]));
}

#[test]
fn fiber_needs_a_cap_when_unbounded() {
    let gens = r#"{"kind":"finite","elements":["(0,1)","(1,0)"]}"#;
    let out = ordsemi(&[
        "fiber",
        "--instance",
        "lex_vectors:2",
        "--gens",
        gens,
        "--target",
        "(1,0)",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = ordsemi(&[
        "fiber",
        "--instance",
        "lex_vectors:2",
        "--gens",
        gens,
        "--target",
        "(1,1)",
        "--length-cap",
        "3",
    ]);
    assert!(out.status.success());
    assert_eq!(json_lines(&out).len(), 2);
}

#[test]
fn shortlex_products_do_not_commute() {
    let gens = r#"{"kind":"finite","elements":["a","ba"]}"#;
    let out = ordsemi(&[
        "enumerate",
        "--instance",
        "shortlex:ab",
        "--gens",
        gens,
        "--k",
        "7",
    ]);
    let values: Vec<String> = json_lines(&out)
        .iter()
        .map(|r| r["value"].as_str().unwrap().to_string())
        .collect();
    assert!(values.contains(&"aba".to_string()) && values.contains(&"baa".to_string()));
}

#[test]
fn classes_matrix() {
    let out = ordsemi(&["classes", "--instance", "lex_vectors:2", "(0,1)", "(1,0)"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "element,\"(0,1)\",\"(1,0)\"\n\"(0,1)\",=,<\n\"(1,0)\",>,=\n"
    );
}

#[test]
fn verify_passes_and_sets_exit_code() {
    let gens = gens_file("verify_two_three.json", TWO_THREE);
    let out = ordsemi(&[
        "verify",
        "--instance",
        "additive_naturals",
        "--gens",
        gens.to_str().unwrap(),
        "--k",
        "20",
        "--max-len",
        "6",
        "--trials",
        "2000",
        "--seed",
        "7",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["seed"], 7);
    let names: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(names.contains(&"fiber.exactness"));
}

#[test]
fn verify_text_report() {
    let out = ordsemi(&[
        "verify",
        "--instance",
        "shortlex:ab",
        "--gens",
        r#"{"kind":"finite","elements":["a","b"]}"#,
        "--k",
        "15",
        "--max-len",
        "4",
        "--trials",
        "1000",
        "--seed",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[PASS] enumeration.oracle_equivalence"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn series_operations() {
    let run = |args: &[&str]| stdout(&ordsemi(args)).trim().to_string();
    assert_eq!(
        run(&["series", "inv", "--bound", "4/3", "x^(1/2) + x^(2/3)"]),
        "1 + x^(1/2) + x^(2/3) + x + 2*x^(7/6) + x^(4/3)"
    );
    assert_eq!(
        run(&[
            "series",
            "mul",
            "--bound",
            "3",
            "1 - x",
            "1 + x + x^2 + x^3"
        ]),
        "1"
    );
    assert_eq!(
        run(&["series", "add", "--bound", "3", "1 + x", "2 - x"]),
        "3"
    );
    assert_eq!(
        run(&["series", "inv", "--bound", "3", "x"]),
        "1 + x + x^2 + x^3"
    );
    assert_eq!(
        run(&[
            "series",
            "mul",
            "--bound",
            "(1,0)",
            "--exponents",
            "lex:2",
            "1 + x^(0,1)",
            "1 - x^(0,1)"
        ]),
        "1 - x^(0,2)"
    );
}

#[test]
fn bad_input_is_reported() {
    let out = ordsemi(&[
        "enumerate",
        "--instance",
        "nope",
        "--gens",
        TWO_THREE,
        "--k",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown instance"));
    let out = ordsemi(&["series", "inv", "--bound", "2", "1 + x"]);
    assert_eq!(out.status.code(), Some(2));
}
