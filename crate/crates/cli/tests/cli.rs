//! End-to-end tests of the `pdg` binary: every example in the README runs
//! here with its exit status and key JSON fields asserted.

use std::path::PathBuf;
use std::process::{Command, Output};

fn pdg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pdg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_stdout(out: &Output) -> serde_json::Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("stdout is not pure JSON: {e}\n{text}"))
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("pdg-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_c7_strict_squares() {
    let out = pdg(&[
        "verify",
        "--graph",
        "C7",
        "--labels",
        "0,4,3485,3124,2283,74,25",
        "--mode",
        "strict",
        "--k",
        "2",
        "--output",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_stdout(&out);
    assert_eq!(doc["ok"], true);
    assert_eq!(doc["schema"], "pdg/v1");
}

#[test]
fn verify_rejects_perturbed_c7() {
    let out = pdg(&[
        "verify",
        "--graph",
        "C7",
        "--labels",
        "0,4,3485,3124,2283,75,25",
        "--mode",
        "strict",
        "--k",
        "2",
        "--output",
        "json",
    ]);
    assert_eq!(exit_code(&out), 1);
    let doc = json_stdout(&out);
    assert_eq!(doc["ok"], false);
    assert!(!doc["violations"].as_array().unwrap().is_empty());
}

#[test]
fn verify_from_labels_file() {
    let path = temp_file(
        "k4.json",
        r#"{"labels": {"0": 0, "1": 2, "2": 5, "3": 7}}"#,
    );
    let out = pdg(&[
        "verify",
        "--graph",
        "K4",
        "--labels-file",
        path.to_str().unwrap(),
        "--mode",
        "power",
        "--k",
        "1",
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn construct_k6_power_squares() {
    let out = pdg(&[
        "construct", "--graph", "K6", "--mode", "power", "--k", "2", "--output", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_stdout(&out);
    assert_eq!(doc["verified"], true);
    assert_eq!(doc["labels"]["5"], 11);
}

#[test]
fn construct_k9_power_is_a_verified_negative() {
    let out = pdg(&[
        "construct", "--graph", "K9", "--mode", "power", "--output", "json",
    ]);
    assert_eq!(exit_code(&out), 1);
    let doc = json_stdout(&out);
    assert_eq!(doc["constructed"], false);
}

#[test]
fn construct_twin_prime_family_and_budget_error() {
    let out = pdg(&["construct", "--graph", "K_1_1_5", "--mode", "product"]);
    assert_eq!(exit_code(&out), 0);

    let out = pdg(&[
        "construct",
        "--graph",
        "K_1_1_10",
        "--mode",
        "product",
        "--sieve-budget",
        "108",
        "--output",
        "json",
    ]);
    assert_eq!(exit_code(&out), 3);
    let doc = json_stdout(&out);
    assert!(doc["error"].as_str().unwrap().contains("budget"));
}

#[test]
fn construct_cycle_strict() {
    let out = pdg(&[
        "construct", "--graph", "C9", "--mode", "strict", "--k", "2", "--output", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_stdout(&out);
    assert_eq!(doc["constructed"], true);
    assert_eq!(doc["k"], 2);
}

#[test]
fn construct_outerplanar_from_file() {
    // A 16-cycle with one chord, girth 9: two faces of nine vertices each.
    let mut edges: Vec<[usize; 2]> = (0..16).map(|i| [i, (i + 1) % 16]).collect();
    edges.push([0, 8]);
    let doc = serde_json::json!({
        "n": 16,
        "edges": edges,
        "blocks": [{"outer": (0..16).collect::<Vec<_>>(), "chords": [[0, 8]]}],
    });
    let path = temp_file("outerplanar.json", &doc.to_string());
    let out = pdg(&[
        "construct",
        "--graph",
        path.to_str().unwrap(),
        "--mode",
        "strict",
        "--k",
        "1",
        "--output",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json_stdout(&out);
    assert_eq!(doc["verified"], true);
}

#[test]
fn search_exhausts_k123() {
    let out = pdg(&[
        "search", "--graph", "K_1_2_3", "--mode", "product", "--k", "1", "--bound", "50",
        "--output", "json",
    ]);
    assert_eq!(exit_code(&out), 1);
    let doc = json_stdout(&out);
    assert_eq!(doc["status"], "exhausted");
    assert_eq!(doc["label_bound"], 50);
    assert!(doc["nodes_explored"].as_u64().unwrap() > 0);
    assert!(doc["wall_ms"].is_u64());
    assert!(doc["certificate"].is_null());
}

#[test]
fn search_enumerates_k122() {
    let out = pdg(&[
        "search", "--graph", "K_1_2_2", "--mode", "product", "--k", "1", "--bound", "30",
        "--all", "--output", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_stdout(&out);
    assert_eq!(doc["complete"], true);
    assert!(!doc["certificates"].as_array().unwrap().is_empty());
}

#[test]
fn search_budget_out_is_exit_three() {
    let out = pdg(&[
        "search", "--graph", "K_2_2_2", "--mode", "product", "--k", "1", "--bound", "50",
        "--node-budget", "5", "--output", "json",
    ]);
    assert_eq!(exit_code(&out), 3);
    let doc = json_stdout(&out);
    assert_eq!(doc["status"], "budget_out");
}

#[test]
fn search_parallel_matches_sequential() {
    let seq = pdg(&[
        "search", "--graph", "K_1_1_1_2", "--mode", "product", "--k", "2", "--bound", "40",
        "--output", "json",
    ]);
    let par = pdg(&[
        "search", "--graph", "K_1_1_1_2", "--mode", "product", "--k", "2", "--bound", "40",
        "--jobs", "4", "--output", "json",
    ]);
    assert_eq!(exit_code(&seq), 0);
    assert_eq!(exit_code(&par), 0);
    assert_eq!(json_stdout(&seq)["certificate"], json_stdout(&par)["certificate"]);
}

#[test]
fn ppn_brackets_k1112() {
    let out = pdg(&[
        "ppn", "--graph", "K_1_1_1_2", "--bound", "50", "--output", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_stdout(&out);
    assert_eq!(doc["chi"], 4);
    assert_eq!(doc["lower"], 1);
    assert_eq!(doc["upper"], 2);
    assert_eq!(doc["evidence_at_lower"]["status"], "exhausted");
}

#[test]
fn ppc_scan_reports_honest_statuses() {
    let out = pdg(&["ppc", "--k", "2", "--n-max", "9", "--output", "json"]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_stdout(&out);
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 7);
    let by_n = |n: u64| {
        entries
            .iter()
            .find(|e| e["n"] == n)
            .unwrap_or_else(|| panic!("entry for {n}"))
    };
    assert_eq!(by_n(3)["status"]["status"], "unknown");
    assert_eq!(by_n(4)["status"]["status"], "constructed");
    assert_eq!(by_n(7)["status"]["status"], "constructed");
    assert_eq!(by_n(9)["status"]["status"], "constructed");
}

#[test]
fn twopower_demo_passes() {
    let out = pdg(&["twopower-demo", "--output", "json"]);
    assert_eq!(exit_code(&out), 0);
    let doc = json_stdout(&out);
    assert_eq!(doc["fixtures"].as_array().unwrap().len(), 6);
    for e in doc["k7_evidence"].as_array().unwrap() {
        assert_eq!(e["status"], "exhausted");
    }
}

#[test]
fn two_odd_decisions() {
    let out = pdg(&["2odd", "--graph", "K4", "--naive"]);
    assert_eq!(exit_code(&out), 0);

    // K5 has no valid red-blue coloring: every parity split leaves a red
    // clique on 3+ vertices or a red vertex of degree 3.
    let out = pdg(&["2odd", "--graph", "K5", "--naive", "--output", "json"]);
    assert_eq!(exit_code(&out), 1);
    let doc = json_stdout(&out);
    assert_eq!(doc["two_odd"], false);
    assert_eq!(doc["naive_agrees"], true);
}

#[test]
fn malformed_graph_file_is_a_usage_error() {
    let path = temp_file("broken.json", r#"{"n": 4, "edges": [[0, 1], [1"#);
    let out = pdg(&["verify", "--graph", path.to_str().unwrap(), "--labels", "0,2", "--mode", "power"]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line"), "schema errors carry a position: {err}");
}

#[test]
fn unknown_generator_is_a_usage_error() {
    let out = pdg(&["verify", "--graph", "Q17", "--labels", "0,2", "--mode", "power"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn emit_dot_writes_a_rendering() {
    let path = std::env::temp_dir().join(format!("pdg-test-{}.dot", std::process::id()));
    let out = pdg(&[
        "construct",
        "--graph",
        "K4",
        "--mode",
        "power",
        "--emit-dot",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("--"));
}
