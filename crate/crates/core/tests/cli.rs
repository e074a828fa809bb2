use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use symquad::rational::int;
use symquad::{NegPartRep, QuadratizationResult, VerifyReport};

fn symquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symquad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_symquad"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn quadratize_json(args: &[&str]) -> String {
    let mut full = vec!["quadratize"];
    full.extend_from_slice(args);
    let o = symquad(&full);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

#[test]
fn represent_examples() {
    let o = symquad(&[
        "represent",
        "--family",
        "neg-monomial",
        "--n",
        "3",
        "--mode",
        "half",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rep: NegPartRep = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep.alphas(), vec![int(0), int(0), int(0), int(2)]);

    let o = symquad(&["represent", "--k", "0,0,0", "--mode", "fix"]);
    let rep: NegPartRep = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(rep.alphas().iter().all(|a| *a == int(0)));
    assert_eq!(rep.affine_const, int(0));
    assert_eq!(rep.affine_linear, int(0));

    let o = symquad(&[
        "represent",
        "--family",
        "parity",
        "--n",
        "4",
        "--mode",
        "fix",
    ]);
    let rep: NegPartRep = serde_json::from_str(&stdout(&o)).unwrap();
    // min(i − l, 0) with coefficient 2(−1)^(i−1) sits at index i + 1
    assert_eq!(rep.alphas()[2..], [int(2), int(-2), int(2)]);
}

#[test]
fn represent_rejects_bad_offsets() {
    let o = symquad(&[
        "represent",
        "--k",
        "0,1",
        "--mode",
        "closed-form",
        "--eps",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = symquad(&["represent", "--k", "0,1", "--mode", "general-eps"]);
    assert_eq!(o.status.code(), Some(2));
    let o = symquad(&["represent", "--k", "0,x", "--mode", "half"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn quadratize_examples() {
    let r: QuadratizationResult =
        serde_json::from_str(&quadratize_json(&["--family", "parity", "--n", "6"])).unwrap();
    assert_eq!(r.aux_count, 3);

    let r: QuadratizationResult = serde_json::from_str(&quadratize_json(&[
        "--family",
        "t-out-of-n",
        "--t",
        "2",
        "--n",
        "3",
    ]))
    .unwrap();
    assert!(r.aux_count <= 2);

    let r: QuadratizationResult =
        serde_json::from_str(&quadratize_json(&["--k", "3,-1,4,1/2,-5,9", "--n", "5"])).unwrap();
    assert!(r.aux_count <= 3);

    let o = symquad(&[
        "quadratize",
        "--family",
        "t-out-of-n",
        "--t",
        "7",
        "--n",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn quadratize_reads_stdin() {
    let o = with_stdin(
        &["quadratize", "--input", "-"],
        r#"{"n":3,"k":["0","1","1","0"]}"#,
    );
    assert_eq!(o.status.code(), Some(0));
    let r: QuadratizationResult = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.g.n(), 3);
}

#[test]
fn verify_pass_and_failure() {
    let dir = std::env::temp_dir().join(format!("symquad-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("parity6.json");
    let text = quadratize_json(&["--family", "parity", "--n", "6"]);
    std::fs::write(&good, &text).unwrap();

    let o = symquad(&[
        "verify",
        "--g",
        good.to_str().unwrap(),
        "--family",
        "parity",
        "--n",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: VerifyReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(report.passed);

    let mut value: Value = serde_json::from_str(&text).unwrap();
    let terms = value["terms"].as_array_mut().unwrap();
    terms.push(serde_json::json!({"vars": [], "coef": "1/3"}));
    let bad = dir.join("corrupt.json");
    std::fs::write(&bad, value.to_string()).unwrap();
    let o = symquad(&[
        "verify",
        "--g",
        bad.to_str().unwrap(),
        "--family",
        "parity",
        "--n",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let report: VerifyReport = serde_json::from_str(&stdout(&o)).unwrap();
    let c = report.counterexample.unwrap();
    assert_eq!(c.got, &c.expected + symquad::rational::rat(1, 3));

    let o = symquad(&[
        "verify",
        "--g",
        good.to_str().unwrap(),
        "--family",
        "parity",
        "--n",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_interpolant_against_table_and_polynomial() {
    let g =
        r#"{"n":2,"m":0,"terms":[{"vars":["x1","x2"],"coef":"-1/2"},{"vars":["x2"],"coef":"3"}]}"#;
    let o = symquad(&["verify", "--g", g, "--table", "0,0,3,5/2"]);
    assert_eq!(o.status.code(), Some(0));
    let f = r#"{"n":2,"terms":[{"vars":["x2"],"coef":"3"},{"vars":["x1","x2"],"coef":"-1/2"}]}"#;
    let o = symquad(&["verify", "--g", g, "--input", f]);
    assert_eq!(o.status.code(), Some(0));
    let o = symquad(&["verify", "--g", g, "--table", "0,0,3,5"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn lift_commands() {
    let f = r#"{"n":2,"terms":[{"vars":["x1","x2"],"coef":"1"}]}"#;
    let o = symquad(&["lift", "--input", f]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["N"], 3);
    assert_eq!(v["k"], serde_json::json!(["0", "0", "0", "1"]));

    let f = r#"{"n":3,"terms":[{"vars":["x1","x2","x3"],"coef":"1"}]}"#;
    let o = symquad(&["lift", "--input", f, "--roundtrip"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["passed"], true);
    assert_eq!(v["projected"]["m"], v["lifted"]["m"]);
}

#[test]
fn oracle_reports_degree_three() {
    let o = symquad(&["oracle"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["degree"], 3);
    assert_eq!(v["top_coefficient"], "4");
}

#[test]
fn report_table_is_deterministic_and_complete() {
    let a = symquad(&["report", "--n-max", "8", "--format", "table"]);
    let b = symquad(&["report", "--n-max", "8", "--format", "table"]);
    assert_eq!(a.status.code(), Some(0));
    let text = stdout(&a);
    assert_eq!(text, stdout(&b));
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(2)
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert!(rows.iter().all(|r| r[5] == "yes"));
    assert!(rows
        .iter()
        .any(|r| r[..5] == ["pos-monomial", "7", "-", "3", "3"]));
    assert!(rows
        .iter()
        .any(|r| r[..5] == ["parity-complement", "5", "-", "2", "2"]));
    for family in symquad::Family::ALL
        .iter()
        .filter(|f| **f != symquad::Family::FromRep)
    {
        assert!(
            rows.iter().any(|r| r[0] == family.name()),
            "{family} missing"
        );
    }
}

#[test]
fn json_outputs_reparse_identically() {
    let text = quadratize_json(&["--family", "exact-t", "--t", "2", "--n", "7"]);
    let r: QuadratizationResult = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&r).unwrap() + "\n";
    assert_eq!(again, text);

    let o = symquad(&[
        "represent",
        "--k",
        "1/2,-3,7,0",
        "--mode",
        "closed-form",
        "--eps",
        "2/3",
    ]);
    let rep: NegPartRep = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&rep).unwrap() + "\n",
        stdout(&o)
    );
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("symquad-out-{}.json", std::process::id()));
    let o = symquad(&["oracle", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n"], 3);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(symquad(&[]).status.code(), Some(2));
    assert_eq!(symquad(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        symquad(&["quadratize", "--family", "parity"]).status.code(),
        Some(2)
    );
    assert_eq!(symquad(&["report", "--n-max", "99"]).status.code(), Some(2));
}
