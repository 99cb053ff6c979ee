//! Black-box tests of the binary: exit codes, formats, determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_comparability"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn gen_grid(dir: &Path, a: usize, b: usize, seed: u64) -> PathBuf {
    let path = dir.join(format!("grid-{a}-{b}-{seed}.json"));
    let out = run(&[
        "gen",
        "grid",
        "--a",
        &a.to_string(),
        "--b",
        &b.to_string(),
        "--seed",
        &seed.to_string(),
        "--out",
        path.to_str().unwrap(),
        "--deterministic",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn gen_grid_reports_the_vertex_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_grid(dir.path(), 3, 2, 7);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"n\": 12"));
}

#[test]
fn gen_ranked_reports_the_vertex_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = run(&[
        "gen", "ranked", "--r", "2", "--b", "2", "--a", "4", "--seed", "1", "--variant",
        "disjoint", "--out", path.to_str().unwrap(), "--deterministic",
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"n\": 16"));
    assert!(text.contains("\"variant\":\"disjoint\""));
}

#[test]
fn gen_rejects_contradictory_parameters() {
    let out = run(&["gen", "grid", "--a", "3", "--n", "500", "--seed", "1", "--out", "/tmp/x.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_accepts_valid_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_grid(dir.path(), 3, 2, 7);
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_flags_a_corrupted_label() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_grid(dir.path(), 3, 2, 7);
    let text = std::fs::read_to_string(&path).unwrap();
    // Flip one edge's label set from order 1 to order 2.
    let needle = "[0, 3, [1]]";
    assert!(text.contains(needle));
    let corrupted = text.replacen(needle, "[0, 3, [2]]", 1);
    std::fs::write(&path, corrupted).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("[FAIL] construction.edges-match-rebuild"));
}

#[test]
fn verify_rejects_truncated_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_grid(dir.path(), 2, 2, 1);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, &text[..text.len() / 2]).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_flags_unsorted_edges() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_grid(dir.path(), 2, 2, 1);
    let text = std::fs::read_to_string(&path).unwrap();
    // Swap the first two edge lines.
    let mut lines: Vec<&str> = text.lines().collect();
    let first_edge = lines.iter().position(|l| l.trim_start().starts_with('[')).unwrap();
    lines.swap(first_edge, first_edge + 1);
    std::fs::write(&path, lines.join("\n")).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("format"));
}

#[test]
fn analyze_alpha_of_grid_equals_cell_size() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_grid(dir.path(), 3, 2, 11);
    let out = run(&["analyze", path.to_str().unwrap(), "--alpha"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["alpha"]["value"], 3);
    assert_eq!(report["alpha"]["exact"], true);
}

#[test]
fn analyze_homogeneous_meets_guarantee() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_grid(dir.path(), 3, 3, 1);
    let out = run(&["analyze", path.to_str().unwrap(), "--homogeneous"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["homogeneous"]["meets_guarantee"], true);
    assert_eq!(report["homogeneous"]["verified"], true);
    assert!(report["homogeneous"]["size"].as_u64().unwrap() >= 3);
}

#[test]
fn analyze_biclique_of_complete_bipartite_generic_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k33.json");
    // Hand-written generic instance: K_{3,3} with one constituent order.
    let mut edges = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            edges.push(format!("    [{u}, {v}, [1]]"));
        }
    }
    let text = format!(
        "{{\n  \"format_version\": 1,\n  \"kind\": \"generic\",\n  \"n\": 6,\n  \"r\": 1,\n  \"edges\": [\n{}\n  ],\n  \"construction\": null,\n  \"meta\": {{\"tool\":\"comparability\",\"version\":\"0.1.0\"}}\n}}\n",
        edges.join(",\n")
    );
    std::fs::write(&path, text).unwrap();
    let out = run(&["analyze", path.to_str().unwrap(), "--biclique"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["biclique"]["value"], 3);
}

#[test]
fn analyze_homogeneous_rejects_generic_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let text = "{\n  \"format_version\": 1,\n  \"kind\": \"generic\",\n  \"n\": 2,\n  \"r\": 1,\n  \"edges\": [\n    [0, 1, [1]]\n  ],\n  \"construction\": null,\n  \"meta\": {\"tool\":\"t\",\"version\":\"0\"}\n}\n";
    std::fs::write(&path, text).unwrap();
    let out = run(&["analyze", path.to_str().unwrap(), "--homogeneous"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_respects_oracle_limits_and_budget_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_grid(dir.path(), 6, 3, 2); // n = 54 > 40
    let out = run(&["analyze", path.to_str().unwrap(), "--alpha"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["analyze", path.to_str().unwrap(), "--alpha", "--budget", "100000000"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["alpha"]["value"], 6);
}

#[test]
fn analyze_limit_override_via_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_grid(dir.path(), 6, 3, 2); // n = 54
    let out = bin()
        .args(["analyze", path.to_str().unwrap(), "--alpha"])
        .env("COMPARABILITY_CLIQUE_LIMIT", "60")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn export_dimacs_matching() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let text = "{\n  \"format_version\": 1,\n  \"kind\": \"generic\",\n  \"n\": 4,\n  \"r\": 1,\n  \"edges\": [\n    [0, 1, [1]],\n    [2, 3, [1]]\n  ],\n  \"construction\": null,\n  \"meta\": {\"tool\":\"t\",\"version\":\"0\"}\n}\n";
    std::fs::write(&path, text).unwrap();
    let out = run(&["export", path.to_str().unwrap(), "--format", "dimacs"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "p edge 4 2\ne 1 2\ne 3 4\n");
}

#[test]
fn export_complement_of_empty_graph_is_complete() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.json");
    let text = "{\n  \"format_version\": 1,\n  \"kind\": \"generic\",\n  \"n\": 3,\n  \"r\": 1,\n  \"edges\": [],\n  \"construction\": null,\n  \"meta\": {\"tool\":\"t\",\"version\":\"0\"}\n}\n";
    std::fs::write(&path, text).unwrap();
    let out = run(&["export", path.to_str().unwrap(), "--format", "dimacs", "--complement"]);
    assert_eq!(stdout(&out), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

#[test]
fn export_dot_mentions_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_grid(dir.path(), 1, 2, 0);
    let out = run(&["export", path.to_str().unwrap(), "--format", "dot"]);
    let text = stdout(&out);
    assert!(text.starts_with("graph instance {"));
    assert!(text.trim_end().ends_with('}'));
    assert!(text.contains("--"));
    assert!(text.contains("label=\""));
}

#[test]
fn experiment_grid_passes_audits() {
    let out = run(&[
        "experiment", "grid", "--a", "2,3", "--b", "2,3", "--seeds", "3", "--seed", "5",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("[PASS]"));
    assert!(!stdout(&out).contains("[FAIL]"));
}

#[test]
fn experiment_ranked_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report_path = dir.path().join("report.json");
    let out = run(&[
        "experiment",
        "ranked",
        "--r",
        "2",
        "--b",
        "2",
        "--a",
        "4,6",
        "--variant",
        "disjoint",
        "--seeds",
        "2",
        "--seed",
        "9",
        "--epsilon",
        "0.5",
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["experiment"], "ranked");
    assert!(report["report"]["trials"].as_array().unwrap().len() == 4);
}

#[test]
fn instance_round_trip_is_canonical() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_grid(dir.path(), 2, 3, 13);
    let text = std::fs::read_to_string(&path).unwrap();
    // Re-serialize through a second binary invocation path: verify reads and
    // the bytes stay put; a fresh gen with the same flags reproduces them.
    let path2 = gen_grid(dir.path(), 2, 3, 13);
    let text2 = std::fs::read_to_string(&path2).unwrap();
    assert_eq!(text, text2);
}
