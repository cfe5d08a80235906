//! End-to-end command-line behavior: exit codes, report formats, file
//! handling and byte-level reproducibility of the compiled binary.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn run_in_process(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nilalg").chain(args.iter().copied());
    let code = nilalg::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn run_binary(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let exe = env!("CARGO_BIN_EXE_nilalg");
    let output = Command::new(exe).args(args).output().expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        output.stdout,
        output.stderr,
    )
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("nilalg-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn check_on_emitted_document() {
    let (code, doc, _) = run_in_process(&["catalog", "--family", "null", "--n", "4"]);
    assert_eq!(code, 0);
    let path = temp_path("null4.json");
    fs::write(&path, &doc).unwrap();
    let (code, out, _) = run_in_process(&["check", "--file", path.to_str().unwrap()]);
    fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "associative, nilindex 5");
}

#[test]
fn check_fails_on_broken_table() {
    let path = temp_path("broken.json");
    fs::write(
        &path,
        r#"{"dim": 3, "products": [
            {"left": 1, "right": 1, "result": [{"index": 2, "coeff": "1"}]},
            {"left": 2, "right": 1, "result": [{"index": 3, "coeff": "1"}]}
        ]}"#,
    )
    .unwrap();
    let (code, out, _) = run_in_process(&["check", "--file", path.to_str().unwrap()]);
    fs::remove_file(&path).ok();
    assert_eq!(code, 1);
    assert!(out.contains("not associative"), "{out}");
}

#[test]
fn parse_errors_are_runtime_failures() {
    let path = temp_path("bad.json");
    fs::write(&path, r#"{"dim": 1, "products": 3}"#).unwrap();
    let (code, out, _) = run_in_process(&["check", "--file", path.to_str().unwrap()]);
    fs::remove_file(&path).ok();
    assert_eq!(code, 1);
    assert!(out.contains("$.products"), "{out}");
}

#[test]
fn unknown_fields_warn_on_stderr() {
    let path = temp_path("warn.json");
    fs::write(&path, r#"{"dim": 2, "products": [], "colour": 1}"#).unwrap();
    let (code, _, err) = run_in_process(&["series", "--file", path.to_str().unwrap()]);
    fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert!(err.contains("ignoring unknown field `colour`"), "{err}");
}

#[test]
fn subcommand_reports() {
    let (code, out, _) = run_in_process(&["series", "--family", "filiform", "--n", "6", "--variant", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "dims (6,4,3,2,1,0)");

    let (code, out, _) = run_in_process(&[
        "grading", "--family", "p-filiform", "--n", "7", "--p", "3", "--s", "2,1,0,0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "dims (3,2,1,1)");

    let (code, out, _) = run_in_process(&[
        "positions", "--family", "p-filiform", "--n", "6", "--p", "3", "--s", "2,1,0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(1,1,2)");

    let (code, out, _) = run_in_process(&["invariants", "--family", "filiform", "--n", "6", "--variant", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "left=2 right=2 two-sided=1 commutator=1");

    let (code, out, _) = run_in_process(&[
        "charseq", "--family", "quasi", "--n", "7", "--variant", "2", "--alpha", "1/2",
        "--seed", "9", "--trials", "40",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(5,2)");
}

#[test]
fn json_reports_are_structured() {
    let (code, out, _) = run_in_process(&["--json", "check", "--family", "null", "--n", "4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["associative"], serde_json::json!(true));
    assert_eq!(v["nilindex"], serde_json::json!(5));

    let (code, out, _) = run_in_process(&[
        "--json", "constraints", "--n", "8", "--p", "4", "--s", "2,2,0,0",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["unknowns"].as_array().unwrap().len(), 4);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 1);
}

#[test]
fn catalog_document_round_trips() {
    let (code, doc, _) = run_in_process(&[
        "catalog", "--family", "quasi", "--n", "7", "--variant", "2", "--alpha", "-1/3",
    ]);
    assert_eq!(code, 0);
    let (algebra, warnings) = nilalg::io::parse_algebra(&doc).unwrap();
    assert!(warnings.is_empty());
    let expected = nilalg::catalog::quasi_filiform_variant(
        7,
        2,
        Some(&nilalg::Scalar::new(-1, 3).unwrap()),
    )
    .unwrap();
    assert_eq!(algebra, expected);
    assert!(doc.contains("\"family\": \"quasi\""));
}

#[test]
fn binary_output_is_byte_reproducible() {
    let args = [
        "charseq", "--family", "p-filiform", "--n", "7", "--p", "3", "--s", "2,1,0,0",
        "--seed", "31", "--trials", "60",
    ];
    let (c1, out1, _) = run_binary(&args);
    let (c2, out2, _) = run_binary(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(out1, out2);
    assert_eq!(String::from_utf8(out1).unwrap().trim(), "(4,1,1,1)");

    let (c1, doc1, _) = run_binary(&["catalog", "--family", "null", "--n", "6"]);
    let (c2, doc2, _) = run_binary(&["catalog", "--family", "null", "--n", "6"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(doc1, doc2);
}

#[test]
fn verify_theorems_reports_one_line_per_suite() {
    // at n_max = 5 the quasi range is empty and every suite passes
    let (code, out, _) = run_in_process(&["verify-theorems", "--n-max", "5"]);
    assert_eq!(code, 0, "{out}");
    let lines: Vec<&str> = out.trim().lines().collect();
    assert_eq!(lines.len(), 9, "{out}");
    for line in &lines {
        assert!(line.starts_with("PASS "), "{line}");
    }
    for name in [
        "catalog-associativity",
        "null-filiform-invariants",
        "characteristic-sequences",
        "natural-grading",
        "graded-theorem-regressions",
        "excluded-jordan-form",
        "constraint-enumeration",
        "invariant-discrimination",
        "roundtrip-determinism",
    ] {
        assert!(out.contains(name), "missing suite {name}");
    }
}

#[test]
fn usage_errors_exit_2_and_diagnose() {
    let (code, _, err) = run_in_process(&["charseq", "--family", "null", "--n", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("--seed") || err.contains("required"), "{err}");

    let (code, _, err) = run_in_process(&["positions"]);
    assert_eq!(code, 2);
    assert!(err.contains("--file or --family"), "{err}");

    let (code, _, err) = run_in_process(&["constraints", "--n", "6", "--p", "2", "--s", "2,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("length"), "{err}");
}
