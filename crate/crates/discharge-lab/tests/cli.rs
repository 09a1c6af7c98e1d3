//! End-to-end checks of the discharge-lab binary: exit codes, JSON output,
//! and batch behavior.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use discharge_lab::cli::{AnalyzeReport, BatchReport};
use discharge_lab::coloring::ExtensionReport;
use discharge_lab::plane_graph::{emit_planar_code, fixtures};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_discharge-lab"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.rot"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn discharge_emits_a_conserving_json_ledger() {
    let out = run(&["discharge", "--input", fixture("F1").to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["schema_version"], 1);
    assert_eq!(value["command"], "discharge");
    assert_eq!(value["report"]["conservation"], true);
    assert_eq!(value["report"]["final_sum"], "0/1");
    assert_eq!(value["report"]["initial_sum"], "0/1");
    // rationals ride as strings, never floats
    let charges = value["report"]["final_charges"].as_object().unwrap();
    assert!(charges.values().all(|v| v.is_string()));
}

#[test]
fn class_flags_the_special_nine_cycle() {
    let out = run(&["class", "--input", fixture("F2").to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("Special9Cycle"));

    let out = run(&["class", "--input", fixture("F3").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
}

#[test]
fn color_exit_codes() {
    let out = run(&["color", "--input", fixture("F4").to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("none"));

    let out = run(&["color", "--input", fixture("F1").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("3-colorable"));
}

#[test]
fn extend_exit_codes_and_json() {
    let out = run(&["extend", "--input", fixture("F10").to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let out = run(&[
        "extend",
        "--input",
        fixture("F8").to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(code(&out), 1);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report: ExtensionReport = serde_json::from_value(value["report"].clone()).unwrap();
    assert!(!report.boundary_is_good);
    assert!(report.non_extendable() > 0);
}

#[test]
fn audit_exit_codes() {
    let out = run(&["audit", "--input", fixture("F9").to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("MinDegree"));

    let out = run(&["audit", "--input", fixture("F1").to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn analyze_json_round_trips() {
    let out = run(&[
        "analyze",
        "--input",
        fixture("F3").to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report: AnalyzeReport = serde_json::from_value(value["report"].clone()).unwrap();
    assert_eq!(report.n, 12);
    assert_eq!(report.face_sizes, vec![3, 7, 7, 11]);
    let lengths: Vec<usize> = report.cycles.iter().map(|c| c.record.length).collect();
    assert_eq!(lengths, vec![3, 7, 7, 8, 8, 11, 12]);
    // identical structure after a serialize/deserialize cycle
    let again: AnalyzeReport =
        serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(again, report);
}

#[test]
fn outer_override_redesignates_the_outer_face() {
    let out = run(&[
        "analyze",
        "--input",
        fixture("F2").to_str().unwrap(),
        "--json",
        "--outer",
        "1",
        "2",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report: AnalyzeReport = serde_json::from_value(value["report"].clone()).unwrap();
    // with the triangle as outer face the rim is no longer the boundary
    let out_default = run(&[
        "analyze",
        "--input",
        fixture("F2").to_str().unwrap(),
        "--json",
    ]);
    let default_value: serde_json::Value = serde_json::from_str(&stdout(&out_default)).unwrap();
    let default_report: AnalyzeReport =
        serde_json::from_value(default_value["report"].clone()).unwrap();
    assert_ne!(report.outer_face, default_report.outer_face);
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.rot");
    std::fs::write(&path, "3\n1: 2\n2: 1 3\n").unwrap();
    let out = run(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).starts_with("error:"));

    let out = run(&["color", "--input", "/nonexistent/file.rot"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn batch_over_the_fixture_directory() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let out = run(&["batch", "--input", dir.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report: BatchReport = serde_json::from_value(value["report"].clone()).unwrap();
    assert_eq!(report.summary.total, 10);
    assert_eq!(report.summary.parse_errors, 0);
    assert_eq!(report.summary.theorem3_members, 4);
    assert_eq!(report.summary.contradictions, 0);
    // per-outcome rows merge into the summary
    let colorable = report.outcomes.iter().filter(|o| o.colorable).count();
    assert_eq!(colorable, report.summary.colorable);
}

#[test]
fn batch_over_a_planar_code_stream() {
    let all = fixtures::all();
    let small: Vec<&discharge_lab::PlaneGraph> =
        all.iter().filter(|g| g.n() <= 12).collect();
    let bytes = emit_planar_code(&small).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.pcode");
    std::fs::write(&path, &bytes).unwrap();

    let out = run(&["batch", "--input", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report: BatchReport = serde_json::from_value(value["report"].clone()).unwrap();
    assert_eq!(report.summary.total, small.len());

    let out = run(&[
        "batch",
        "--input",
        path.to_str().unwrap(),
        "--limit",
        "3",
        "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report: BatchReport = serde_json::from_value(value["report"].clone()).unwrap();
    assert_eq!(report.summary.total, 3);
}

#[test]
fn truncated_stream_exits_two_with_last_good_index() {
    let all = fixtures::all();
    let refs: Vec<&discharge_lab::PlaneGraph> = all.iter().take(2).collect();
    let mut bytes = emit_planar_code(&refs).unwrap();
    bytes.extend_from_slice(&[5, 2, 3, 0, 1]); // half a record
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.pcode");
    std::fs::write(&path, &bytes).unwrap();

    let out = run(&["batch", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let text = stdout(&out);
    assert!(text.contains("last good graph index: 1"), "{text}");
}

#[test]
fn max_cycle_len_caps_the_analysis() {
    let out = run(&[
        "analyze",
        "--input",
        fixture("F3").to_str().unwrap(),
        "--max-cycle-len",
        "7",
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report: AnalyzeReport = serde_json::from_value(value["report"].clone()).unwrap();
    assert!(report.cycles.iter().all(|c| c.record.length <= 7));
    assert_eq!(report.cycles.len(), 3);

    let out = run(&[
        "analyze",
        "--input",
        fixture("F3").to_str().unwrap(),
        "--max-cycle-len",
        "14",
    ]);
    assert_eq!(code(&out), 2); // the enumerator is capped at 13
}

#[test]
fn thread_cap_env_var_is_honored() {
    let out = bin()
        .args(["batch", "--input"])
        .arg(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
        .env("DISCHARGE_LAB_THREADS", "1")
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("summary:"));
}

#[test]
fn empty_stream_is_an_empty_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.pcode");
    std::fs::write(&path, discharge_lab::plane_graph::PLANAR_CODE_HEADER).unwrap();
    let out = run(&["batch", "--input", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report: BatchReport = serde_json::from_value(value["report"].clone()).unwrap();
    assert_eq!(report.summary.total, 0);
}
