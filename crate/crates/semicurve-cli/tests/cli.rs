//! End-to-end tests driving the compiled binary.

use std::path::Path;
use std::process::{Command, Output};

fn semicurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semicurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn info_reports_the_expected_invariants_as_json() {
    let out = semicurve(&["info", "4,9,10", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["frobenius"], 15);
    assert_eq!(v["q"], 2);
    assert_eq!(v["ri_exact"], 2);
    assert_eq!(v["multiplicity"], 4);
    assert_eq!(v["regime"], "above_a2");
    assert_eq!(v["theorem_bound"], 2);
    assert_eq!(v["corollary_bound"], 4);
    assert_eq!(v["hilbert"][0], 1);
    assert_eq!(v["hilbert"][1], 3);
    assert_eq!(v["hilbert"][2], 4);
}

#[test]
fn info_json_round_trips() {
    let first = semicurve(&["info", "5,11,12,13", "--format", "json"]);
    assert!(first.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    let gens: Vec<String> = v["gens"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g.to_string())
        .collect();
    let again = semicurve(&["info", &gens.join(","), "--format", "json"]);
    assert_eq!(stdout(&first), stdout(&again));
}

#[test]
fn info_rejects_invalid_generators_with_exit_2() {
    let out = semicurve(&["info", "2,4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("GcdNotOne"));

    let out = semicurve(&["info", "3,6,7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("NonMinimal"));

    let out = semicurve(&["info", "1,5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("ContainsOne"));

    // Unparseable generator lists are caught by argument validation.
    let out = semicurve(&["info", "3,x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn info_normalize_reduces_and_reports_it() {
    let out = semicurve(&["info", "3,6,7", "--normalize", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["gens"], serde_json::json!([3, 7]));
    assert_eq!(v["normalized"], true);
    assert_eq!(v["frobenius"], 11);

    let table = semicurve(&["info", "3,6,7", "--normalize"]);
    assert!(stdout(&table).contains("normalized:"));
}

#[test]
fn hilbert_emits_the_expected_rows() {
    let out = semicurve(&["hilbert", "3,7", "--max-n", "4", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n,lambda,cumulative\n0,1,1\n1,2,3\n2,3,6\n3,3,9\n4,3,12\n"
    );

    let out = semicurve(&["hilbert", "2,3", "--max-n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["hilbert"], serde_json::json!([1, 2, 2, 2]));

    let out = semicurve(&["hilbert", "3,7,8", "--max-n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["hilbert"], serde_json::json!([1, 3, 3, 3]));
}

#[test]
fn verify_passes_on_small_corpora() {
    let out = semicurve(&[
        "verify", "--family", "plane", "--a1", "2..12", "--a2-max", "14",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS plane_exact_ri"));
    assert!(text.contains("PASS membership_matches_oracle"));
    assert!(!text.contains("FAIL"));

    let out = semicurve(&["verify", "--family", "sharp", "--a1", "3..10"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS sharp_family_invariants"));

    let out = semicurve(&["verify", "--random", "--seed", "7", "--count", "30"]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn verify_requires_a_corpus_source() {
    let out = semicurve(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_writes_the_documented_columns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sharp.csv");
    let out = semicurve(&[
        "sweep",
        "--family",
        "sharp",
        "--a1",
        "3..12",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "gens,a1,a2,ar,frobenius,regime,q,tau,ri_exact,theorem_bound,corollary_bound,gap_q_minus_ri"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 10);
    for row in &rows {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 12);
        // The bound is met exactly on this family.
        assert_eq!(cols[6], "2", "q column");
        assert_eq!(cols[8], "2", "ri_exact column");
        assert_eq!(cols[11], "0", "gap column");
        // Frobenius is 4*a1 - 1.
        let a1: u64 = cols[1].parse().unwrap();
        assert_eq!(cols[4], (4 * a1 - 1).to_string());
    }
    // First row spells the generators with semicolons.
    assert!(rows[0].starts_with("3;7,3,7,7,11,above_a2"));
}

#[test]
fn sweep_plane_rows_match_the_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plane.csv");
    let out = semicurve(&[
        "sweep",
        "--family",
        "plane",
        "--a1",
        "2..10",
        "--a2-max",
        "12",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    for row in text.lines().skip(1) {
        let cols: Vec<&str> = row.split(',').collect();
        let a1: u64 = cols[1].parse().unwrap();
        let ri: u64 = cols[8].parse().unwrap();
        assert_eq!(ri, a1 - 1, "row {row}");
        // Small-Frobenius regimes always report ri = 1.
        if cols[5] != "above_a2" {
            assert_eq!(ri, 1, "row {row}");
            assert_eq!(cols[6], "", "q must be empty in row {row}");
            assert_eq!(cols[10], "", "corollary_bound must be empty in row {row}");
        }
    }
}

#[test]
fn sweep_reports_io_failures_with_exit_3() {
    let out = semicurve(&[
        "sweep",
        "--random",
        "--count",
        "3",
        "--out",
        "/nonexistent-dir/rows.csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("io error"));
}

#[test]
fn sweep_and_info_agree_on_the_csv_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.csv");
    let out = semicurve(&[
        "sweep",
        "--family",
        "sharp",
        "--a1",
        "4..4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let from_sweep = std::fs::read_to_string(&path).unwrap();

    let info = semicurve(&["info", "4,9,10", "--format", "csv"]);
    assert_eq!(stdout(&info), from_sweep);
    assert!(Path::new(&path).exists());
}
