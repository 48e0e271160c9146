//! End-to-end CLI tests: exit codes, golden columns, format parity, and
//! report stability.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bcforge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("bcforge runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

#[test]
fn validate_preset_exits_zero() {
    let o = run(&["validate", "--preset", "nakamura-cs-case3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("validates"));
}

#[test]
fn validate_broken_model_exits_two_with_bidegree() {
    let path = fixture("broken-d2.json");
    let o = run(&["validate", "--model", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("(1, 0)"), "missing bidegree: {err}");
    assert!(err.contains("∂∘∂"), "missing identity: {err}");
}

#[test]
fn validate_custom_model_file() {
    let path = fixture("torus.json");
    let o = run(&["validate", "--model", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn unknown_preset_is_usage_error() {
    let o = run(&["validate", "--preset", "unknown-preset"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn malformed_json_is_validation_error() {
    let dir = std::env::temp_dir().join("bcforge-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("garbage.json");
    std::fs::write(&path, "{ not json").unwrap();
    let o = run(&["validate", "--model", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bc_column_of_case1_in_table_order() {
    let o = run(&["table", "--preset", "nakamura-cs-case1", "--theories", "bc", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let body = stdout(&o);
    let dims: Vec<u32> = body
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 1, 1, 3, 7, 3, 1, 9, 9, 1, 3, 11, 3, 5, 5, 1]);
}

#[test]
fn delbar_values_for_parallelizable_case_b() {
    let o = run(&["table", "--preset", "nakamura-cp-caseB", "--theories", "delbar", "--format", "csv"]);
    let body = stdout(&o);
    let lookup = |p: i64, q: i64| -> u32 {
        body.lines()
            .find(|l| l.starts_with(&format!("delbar,{p},{q},")))
            .unwrap()
            .rsplit(',')
            .next()
            .unwrap()
            .parse()
            .unwrap()
    };
    assert_eq!(lookup(1, 0), 3);
    assert_eq!(lookup(0, 1), 1);
    assert_eq!(lookup(1, 1), 3);
    assert_eq!(lookup(2, 2), 3);
}

#[test]
fn zero_model_emits_all_zero_table() {
    // The torus has no cohomology beyond the four classes; a model with an
    // empty generator list renders an empty (all-zero) table.
    let dir = std::env::temp_dir().join("bcforge-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let text = std::fs::read_to_string(fixture("torus.json")).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["generators"] = serde_json::json!({"explicit": []});
    doc["name"] = serde_json::json!("empty-model");
    let path = dir.join("empty.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = run(&["table", "--model", path.to_str().unwrap(), "--theories", "bc,dr", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let body = stdout(&o);
    for line in body.lines().skip(1) {
        assert!(line.ends_with(",0") || line.is_empty(), "{line}");
    }
}

#[test]
fn ddbar_verdicts() {
    let o = run(&["ddbar", "--preset", "nakamura-cs-case3"]);
    assert!(stdout(&o).contains("SATISFIED"));
    let o = run(&["ddbar", "--preset", "nakamura-cs-case1"]);
    let body = stdout(&o);
    assert!(body.contains("VIOLATED"));
    for (k, v) in [(1, 8), (2, 20), (3, 24), (4, 20), (5, 8)] {
        assert!(body.contains(&format!("k={k}  degree {v}")), "{body}");
    }
    let o = run(&["ddbar", "--preset", "nakamura-cp-caseA"]);
    let body = stdout(&o);
    assert!(body.contains("VIOLATED"));
    assert!(body.contains("k=3  degree 24"));
}

#[test]
fn compare_invariant_submodel_pure_bijective() {
    let o = run(&[
        "compare",
        "--sub",
        "nakamura-cs-case3-Agamma",
        "--ambient",
        "nakamura-cs-case3",
        "--theories",
        "pure",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let body = stdout(&o);
    let rows: Vec<&str> = body.lines().filter(|l| l.contains("pure")).collect();
    assert_eq!(rows.len(), 16);
    assert!(rows.iter().all(|l| l.contains("bijective")), "{body}");
}

#[test]
fn compare_identity_bijective_everywhere() {
    let o = run(&[
        "compare",
        "--sub",
        "nakamura-cs-case2",
        "--ambient",
        "nakamura-cs-case2",
        "--theories",
        "dr,delbar,bc,aeppli",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let body = stdout(&o);
    assert!(body.lines().skip(2).all(|l| l.is_empty() || l.contains("bijective")), "{body}");
}

#[test]
fn compare_b_submodel_delbar_bijective() {
    // Write the parallelizable B sub-model spec to a file and compare it
    // against the shipped ambient preset.
    let spec = bcforge_core::models::cp_b_gamma_spec(2);
    let text = bcforge_core::models::model_to_json(&spec).unwrap();
    let dir = std::env::temp_dir().join("bcforge-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cp-caseB-Bgamma.json");
    std::fs::write(&path, text).unwrap();
    let o = run(&[
        "compare",
        "--sub",
        path.to_str().unwrap(),
        "--ambient",
        "nakamura-cp-caseB",
        "--theories",
        "delbar",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let body = stdout(&o);
    let rows: Vec<&str> = body.lines().filter(|l| l.contains("delbar")).collect();
    assert_eq!(rows.len(), 16);
    assert!(rows.iter().all(|l| l.contains("bijective")), "{body}");
}

#[test]
fn json_reports_are_byte_stable_and_round_trip() {
    let args = ["table", "--preset", "nakamura-cs-case2", "--theories", "bc,delbar,dr", "--format", "json"];
    let first = stdout(&run(&args));
    let second = stdout(&run(&args));
    assert_eq!(first, second, "byte-identical across runs");
    let value: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(value["schema"], "report-v1");
    // Lossless round trip at the document level.
    let re = serde_json::to_string(&value).unwrap();
    let value2: serde_json::Value = serde_json::from_str(&re).unwrap();
    assert_eq!(value, value2);
}

#[test]
fn formats_carry_identical_numbers() {
    let csv = stdout(&run(&["table", "--preset", "nakamura-cp-caseB", "--theories", "bc", "--format", "csv"]));
    let json = stdout(&run(&["table", "--preset", "nakamura-cp-caseB", "--theories", "bc", "--format", "json"]));
    let text = stdout(&run(&["table", "--preset", "nakamura-cp-caseB", "--theories", "bc", "--format", "text"]));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    for row in csv.lines().skip(1) {
        let parts: Vec<&str> = row.split(',').collect();
        let (p, q, dim): (i64, i64, u64) =
            (parts[1].parse().unwrap(), parts[2].parse().unwrap(), parts[3].parse().unwrap());
        let found = value["tables"]["bc"]
            .as_array()
            .unwrap()
            .iter()
            .any(|e| e["p"] == p && e["q"] == q && e["dim"] == dim);
        assert!(found, "json missing {row}");
        assert!(text.contains(&format!("({p},{q})  {dim}")), "text missing {row}");
    }
}

#[test]
fn golden_run_passes() {
    let o = run(&["table", "--golden"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all tables match"));
}

#[test]
fn thread_cap_env_is_accepted() {
    let o = bin()
        .env("BCFORGE_THREADS", "1")
        .args(["table", "--preset", "nakamura-cs-case3", "--theories", "bc", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn representative_listing_is_optional() {
    let without = stdout(&run(&["table", "--preset", "nakamura-cs-case3", "--theories", "bc", "--format", "json"]));
    let with = stdout(&run(&["table", "--preset", "nakamura-cs-case3", "--theories", "bc", "--format", "json", "--reps"]));
    let v1: serde_json::Value = serde_json::from_str(&without).unwrap();
    let v2: serde_json::Value = serde_json::from_str(&with).unwrap();
    assert!(v1.get("representatives").is_none());
    assert!(v2.get("representatives").is_some());
}

#[test]
fn validate_list_prints_presets() {
    let o = run(&["validate", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    let body = stdout(&o);
    assert!(body.contains("nakamura-cs-case1"));
    assert!(body.contains("nakamura-cp-caseB-Agamma"));
    assert_eq!(body.lines().count(), 10);
}

#[test]
fn table_output_is_stable_under_thread_caps() {
    let base = stdout(&run(&["table", "--preset", "nakamura-cs-case2", "--theories", "bc,delbar,dr", "--format", "json"]));
    for threads in ["1", "3"] {
        let o = bin()
            .env("BCFORGE_THREADS", threads)
            .args(["table", "--preset", "nakamura-cs-case2", "--theories", "bc,delbar,dr", "--format", "json"])
            .output()
            .unwrap();
        assert_eq!(stdout(&o), base);
    }
}

#[test]
fn compare_unresolvable_inclusion_is_validation_error() {
    let path = fixture("torus.json");
    let o = run(&[
        "compare",
        "--sub",
        path.to_str().unwrap(),
        "--ambient",
        "nakamura-cs-case3",
        "--theories",
        "bc",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("does not resolve"), "{}", stderr(&o));
}
