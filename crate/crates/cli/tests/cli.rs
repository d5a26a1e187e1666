use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rough_mcdm::{parse_structured, CASE_STUDY_JSON};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rough-mcdm"))
}

fn case_study_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/casestudy.json")
}

fn exec(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn cs() -> String {
    case_study_path().display().to_string()
}

#[test]
fn validate_accepts_the_case_study() {
    let o = exec(&["validate", &cs()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("valid (9 alternatives, 7 criteria, 6 experts)"));
    assert!(out.contains("expert 6"));
}

#[test]
fn weights_prints_one_row_per_criterion() {
    let o = exec(&["weights", &cs()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for c in ["C1", "C2", "C3", "C4", "C5", "C6", "C7"] {
        assert!(out.lines().any(|l| l.starts_with(c)), "missing {c}");
    }
    assert!(out.contains("[0.788, 1.000]"));
}

#[test]
fn rank_prints_the_mabac_order() {
    let o = exec(&["rank", &cs()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("mabac: A2 > A3 > A1 > A8 > A4 > A9 > A7 > A6 > A5"));
}

#[test]
fn rank_all_prints_three_methods() {
    let o = exec(&["rank", &cs(), "--method", "all"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for m in ["mabac:", "topsis:", "vikor:"] {
        assert!(out.contains(m), "missing {m}");
    }
}

#[test]
fn out_of_range_vikor_v_is_a_validation_error() {
    let o = exec(&["rank", &cs(), "--method", "vikor", "--vikor-v", "1.5"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("--vikor-v"));
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(code(&exec(&["rank", &cs(), "--method", "electre"])), 1);
    assert_eq!(code(&exec(&["test", &cs(), "--criterion", "4"])), 1);
    assert_eq!(code(&exec(&["weights", &cs(), "--strict-cr", "--lenient-cr"])), 1);
    assert_eq!(code(&exec(&["--help"])), 0);
}

#[test]
fn missing_project_is_reported_with_its_path() {
    let o = exec(&["rank", "no-such-project.json"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("no-such-project.json"));
}

#[test]
fn inconsistent_expert_is_rejected_unless_lenient() {
    let mut v: serde_json::Value = serde_json::from_str(CASE_STUDY_JSON).unwrap();
    // break expert 1: C1 vs C2 strongly one way, C2 vs C3 and C3 vs C1 strongly the other
    let m = &mut v["pairwise_matrices"][0];
    m[0][1] = serde_json::json!(9);
    m[1][0] = serde_json::json!("1/9");
    m[1][2] = serde_json::json!(9);
    m[2][1] = serde_json::json!("1/9");
    m[2][0] = serde_json::json!(9);
    m[0][2] = serde_json::json!("1/9");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let p = path.display().to_string();

    let strict = exec(&["weights", &p]);
    assert_eq!(code(&strict), 1);
    assert!(stderr(&strict).contains("expert 1"), "{}", stderr(&strict));

    let lenient = exec(&["weights", &p, "--lenient-cr"]);
    assert_eq!(code(&lenient), 0, "{}", stderr(&lenient));
    assert!(stderr(&lenient).contains("warning"));
}

#[test]
fn validity_tests_pass_on_the_case_study() {
    for c in ["1", "2", "3"] {
        let o = exec(&["test", &cs(), "--criterion", c]);
        assert_eq!(code(&o), 0, "criterion {c}: {}", stdout(&o));
        assert!(stdout(&o).contains("passed"));
    }
}

#[test]
fn validity_test_uses_given_partition_and_method() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("partition.json");
    fs::write(&path, r#"{"subsets": [["A1","A2","A3","A4","A5"], ["A4","A5","A6","A7","A8","A9"]]}"#).unwrap();
    let o = exec(&[
        "test",
        &cs(),
        "--criterion",
        "3",
        "--partition",
        &path.display().to_string(),
        "--method",
        "topsis",
    ]);
    let out = stdout(&o);
    assert!(out.contains("(topsis)"), "{out}");
    assert!(out.contains("subset 2: "), "{out}");
}

#[test]
fn a_better_replacement_fails_rank_stability_with_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sub.json");
    let ratings = vec![vec![9.0; 7]; 6];
    let sub = serde_json::json!({
        "allow_non_dominated": true,
        "substitutions": [{ "alternative": "A5", "ratings": ratings }]
    });
    fs::write(&path, sub.to_string()).unwrap();
    let o = exec(&["test", &cs(), "--criterion", "1", "--substitution", &path.display().to_string()]);
    assert_eq!(code(&o), 3, "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("failed"));
}

#[test]
fn substituting_the_best_alternative_is_a_precondition_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sub.json");
    fs::write(&path, r#"{"substitutions": [{"alternative": "A2", "copy_of": "A5"}]}"#).unwrap();
    let o = exec(&["test", &cs(), "--criterion", "1", "--substitution", &path.display().to_string()]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("precondition"), "{}", stderr(&o));
}

#[test]
fn text_report_lists_every_stage() {
    let o = exec(&["report", &cs()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for heading in [
        "Consistency of expert pairwise matrices",
        "Aggregated rough comparison matrix",
        "Criteria weights",
        "Border approximation area",
        "Ranking",
        "Approximation areas",
    ] {
        assert!(out.contains(heading), "missing {heading}");
    }
}

#[test]
fn structured_report_goes_to_out_file_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = exec(&[
        "report",
        &cs(),
        "--format",
        "structured",
        "--method",
        "all",
        "--out",
        &path.display().to_string(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
    let text = fs::read_to_string(&path).unwrap();
    let report = parse_structured(&text).unwrap();
    assert_eq!(report.ranking.order()[0], "A2");
    assert_eq!(report.baselines.len(), 2);
}

#[test]
fn report_is_byte_identical_across_runs() {
    let a = stdout(&exec(&["report", &cs(), "--format", "structured"]));
    let b = stdout(&exec(&["report", &cs(), "--format", "structured"]));
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn report_includes_requested_validity_tests() {
    let dir = tempfile::tempdir().unwrap();
    let part = dir.path().join("partition.json");
    fs::write(&part, rough_mcdm::CASE_STUDY_PARTITION_JSON).unwrap();
    let o = exec(&["report", &cs(), "--partition", &part.display().to_string()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("Ranking validity"));
}
