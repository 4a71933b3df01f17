use std::path::PathBuf;
use std::process::{Command, Output};

use boxkite::doc::Document;
use boxkite::render::parse_mandala_csv;
use boxkite_core::golden::{sedenion_rows, PRINTED_BOX_KITES};
use boxkite_core::{build_emanation_table, Vertex};
use serde_json::Value;

fn boxkite(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boxkite")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = boxkite(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("{}-{name}", std::process::id()))
}

fn validator() -> jsonschema::Validator {
    let schema: Value = serde_json::from_str(boxkite::SCHEMA).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

const JSON_COMMANDS: &[&[&str]] = &[
    &["table", "--level", "4"],
    &["triplets", "--level", "5"],
    &["boxkite", "--strut", "1"],
    &["boxkite", "--strut", "7"],
    &["mandala", "--strut", "1"],
    &["mandala", "--strut", "8"],
    &["mandala", "--strut", "13"],
    &["fold", "--strut", "9"],
    &["partition", "--strut", "11"],
    &["harmonics", "--strut", "3", "--k", "2"],
    &["harmonics", "--strut", "3", "--k", "1", "--cross"],
    &["census", "--level", "5", "--per-strut"],
    &["verify", "--max-level", "5"],
];

#[test]
fn table_csv_matches_printed_sedenion_table() {
    let csv = stdout(&["table", "--level", "4", "--format", "csv"]);
    let grid: Vec<Vec<String>> = csv.lines().map(|l| l.split(',').map(String::from).collect()).collect();
    assert_eq!(grid.len(), 16);
    let printed = sedenion_rows();
    for (i, row) in grid.iter().enumerate() {
        assert_eq!(row.len(), 16);
        let want: Vec<String> = printed[i].iter().map(|u| u.to_string()).collect();
        assert_eq!(row, &want, "row {i}");
    }
    assert_eq!(grid[1][1], "-0");
}

#[test]
fn boxkite_json_vertices_match_printed_row() {
    let v: Value = serde_json::from_str(&stdout(&["boxkite", "--strut", "1", "--format", "json"])).unwrap();
    assert_eq!(v["kind"], "boxkite");
    let (_, row) = PRINTED_BOX_KITES[0];
    for (vertex, (lo, hi)) in Vertex::ALL.iter().zip(row) {
        let a = &v["data"]["vertices"][vertex.to_string()];
        assert_eq!((a["lo"].as_u64(), a["hi"].as_u64()), (Some(lo as u64), Some(hi as u64)), "{vertex}");
    }
}

#[test]
fn json_validates_and_round_trips() {
    let validator = validator();
    for args in JSON_COMMANDS {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let text = stdout(&full);
        let value: Value = serde_json::from_str(&text).unwrap();
        let errors: Vec<String> =
            validator.iter_errors(&value).map(|e| format!("{} at {}", e, e.instance_path)).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:#?}");
        let doc: Document = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
    }
}

#[test]
fn schema_rejects_hex_and_bad_signs() {
    let validator = validator();
    let bad_sign = serde_json::json!({"kind": "table", "data": {"level": 0, "rows": [[{"sign": "−", "index": 0}]]}});
    assert!(!validator.is_valid(&bad_sign));
    let hex_cell = serde_json::json!({"kind": "table", "data": {"level": 0, "rows": [[{"sign": "+", "index": "A"}]]}});
    assert!(!validator.is_valid(&hex_cell));
    let ok = serde_json::json!({"kind": "table", "data": {"level": 0, "rows": [[{"sign": "+", "index": 0}]]}});
    assert!(validator.is_valid(&ok));
}

#[test]
fn mandala_csv_round_trips_through_the_binary() {
    for s in [1, 5, 8, 9, 15] {
        let csv = stdout(&["mandala", "--strut", &s.to_string(), "--format", "csv"]);
        let parsed = parse_mandala_csv(csv.as_bytes()).unwrap();
        assert_eq!(parsed, build_emanation_table(s).unwrap(), "strut {s}");
    }
}

#[test]
fn mandala_svg_written_to_file() {
    let path = scratch("m9.svg");
    let out = boxkite(&["mandala", "--strut", "9", "--format", "svg", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains(r#"version="1.1""#));
    let red = svg.matches(r##"height="28" fill="#e53935""##).count();
    let green = svg.matches(r##"height="28" fill="#4caf50""##).count();
    assert_eq!((red, green), (48, 24));
    // the outer ring: every border cell except the 4 corners is red
    for (r, c) in (1..13).flat_map(|i| [(0, i), (13, i), (i, 0), (i, 13)]) {
        let (x, y) = (36 + c * 28, 36 + r * 28);
        let tag = format!(r##"<rect x="{x}" y="{y}" width="28" height="28" fill="#e53935""##);
        assert!(svg.contains(&tag), "({r},{c})");
    }
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        &["census", "--level", "5", "--per-strut", "--format", "json"][..],
        &["partition", "--strut", "12", "--format", "csv"],
        &["mandala", "--strut", "3", "--format", "svg"],
        &["verify", "--max-level", "4"],
    ] {
        assert_eq!(boxkite(args).stdout, boxkite(args).stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| boxkite(args).status.code();
    assert_eq!(code(&["verify", "--max-level", "4"]), Some(0));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["table"]), Some(2));
    assert_eq!(code(&["table", "--level", "x"]), Some(2));
    assert_eq!(code(&["table", "--level", "9"]), Some(2));
    assert_eq!(code(&["boxkite", "--strut", "8"]), Some(2));
    assert_eq!(code(&["mandala", "--strut", "16"]), Some(2));
    assert_eq!(code(&["partition", "--strut", "3"]), Some(2));
    assert_eq!(code(&["fold", "--strut", "4"]), Some(2));
    assert_eq!(code(&["census", "--level", "4", "--format", "svg"]), Some(2));
    assert_eq!(code(&["table", "--level", "2", "--format", "pdf"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
    let err = boxkite(&["boxkite", "--strut", "8"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("strut constant 8"));
    assert!(err.stdout.is_empty());
}

#[test]
fn verify_exit_codes() {
    let run = boxkite::run(["boxkite", "verify", "--max-level", "4"]);
    assert_eq!(run.code, 0);
    let Some(doc) = run.document else { panic!("verify produced no output") };
    let Document::Verify(mut report) =
        serde_json::from_slice::<Document>(&boxkite(&["verify", "--max-level", "4", "--format", "json"]).stdout)
            .unwrap()
    else {
        panic!("not a verify document")
    };
    assert!(!doc.payload.is_empty());
    report.claims[0].passed = false;
    let failed = boxkite::outcome(&Document::Verify(report.clone()), boxkite::Format::Text);
    assert_eq!(failed.exit_code(), 1);
    assert!(String::from_utf8(failed.document.payload).unwrap().contains("[FAIL] oracle-n0"));
    // The same claims in a plain census never fail the run.
    assert_eq!(boxkite::outcome(&Document::Census(report), boxkite::Format::Text).exit_code(), 0);
    // An unwritable output path is an argument problem, not a failed check.
    let out = boxkite(&["verify", "--max-level", "3", "--out", "/nonexistent/dir/x.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_outputs() {
    let t = stdout(&["table", "--level", "3"]);
    let row1: Vec<&str> = t.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row1, ["1", "-0", "3", "-2", "5", "-4", "-7", "6"]);

    let m = stdout(&["mandala", "--strut", "1"]);
    let header: Vec<&str> = m.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(header, ["2", "4", "6", "8", "A", "C", "E", "F", "D", "B", "9", "7", "5", "3"]);
    assert!(m.contains("filled 168"));

    let h = stdout(&["harmonics", "--strut", "3", "--k", "1", "--cross"]);
    assert!(h.contains("printed (37, 47)(52, 63) computed (37, 46)(52, 63)"));

    let v = stdout(&["verify", "--max-level", "4"]);
    assert!(v.ends_with("0 checks failed\n"));
}
