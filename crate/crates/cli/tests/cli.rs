use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn orthoposet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthoposet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn poset_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const N_FILE: &str =
    "element a\nelement b\nelement c\nelement d\ncover a c\ncover b c\ncover b d\n";

#[test]
fn analyze_reports_the_n() {
    let f = poset_file(N_FILE);
    let out = orthoposet(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["verdicts"]["n_free"], false);
    assert_eq!(report["verdicts"]["dacey"], false);
    assert_eq!(
        report["witnesses"]["n"],
        serde_json::json!(["a", "b", "c", "d"])
    );
    assert_eq!(report["lattice_size"], 6);
    assert!(report.get("timing_us").is_none());
}

#[test]
fn analyze_is_byte_identical_across_runs() {
    let f = poset_file(N_FILE);
    let path = f.path().to_str().unwrap();
    let first = orthoposet(&["analyze", path]);
    let second = orthoposet(&["analyze", path]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn analyze_with_timing() {
    let f = poset_file(N_FILE);
    let out = orthoposet(&["analyze", "--timing", f.path().to_str().unwrap()]);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["timing_us"].is_u64());
}

#[test]
fn analyze_dot_is_the_hasse_diagram() {
    let f = poset_file("element x\nelement y\ncover x y\n");
    let out = orthoposet(&["analyze", "--format", "dot", f.path().to_str().unwrap()]);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 1);
}

#[test]
fn logic_formats() {
    let f = poset_file(N_FILE);
    let path = f.path().to_str().unwrap();
    let dot = stdout(&orthoposet(&["logic", path, "--format", "dot"]));
    assert_eq!(dot.matches("[label=").count(), 6);
    assert_eq!(dot.matches("->").count(), 6);
    let json: Value =
        serde_json::from_str(&stdout(&orthoposet(&["logic", path, "--format", "json"]))).unwrap();
    assert_eq!(json["elements"].as_array().unwrap().len(), 6);
    assert_eq!(json["orthomodular"], false);

    let strict = stdout(&orthoposet(&[
        "logic",
        path,
        "--format",
        "json",
        "--orthogonality",
        "strict",
    ]));
    let json: Value = serde_json::from_str(&strict).unwrap();
    assert_eq!(json["ortholattice_axioms"], true);
}

#[test]
fn parse_errors_exit_one_with_line_numbers() {
    let f = poset_file("element a\ncover a b\n");
    let out = orthoposet(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");

    let cyc = poset_file("element a\nelement b\ncover a b\ncover b a\n");
    assert_eq!(
        orthoposet(&["analyze", cyc.path().to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn limits_come_from_flags() {
    let f = poset_file(N_FILE);
    let out = orthoposet(&["analyze", "--max-elements", "3", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = orthoposet(&["logic", "--max-lattice", "4", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        orthoposet(&["census", "--max-n", "7"]).status.code(),
        Some(1)
    );
    assert_eq!(
        orthoposet(&["generate", "--kind", "chain", "--n", "30"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(orthoposet(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        orthoposet(&["generate", "--kind", "chain"]).status.code(),
        Some(1)
    );
    assert_eq!(
        orthoposet(&["search", "--predicate", "nope", "--max-n", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(orthoposet(&["--help"]).status.code(), Some(0));
}

#[test]
fn census_summaries() {
    let out = orthoposet(&["census", "--max-n", "4", "--workers", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let totals: Vec<u64> = json
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["total_posets"].as_u64().unwrap())
        .collect();
    assert_eq!(totals, [1, 1, 3, 19, 219]);
    let single = orthoposet(&["census", "--max-n", "4", "--workers", "1"]);
    assert_eq!(single.stdout, out.stdout);
}

#[test]
fn search_exit_codes() {
    let hit = orthoposet(&["search", "--predicate", "strict_dacey", "--max-n", "3"]);
    assert_eq!(hit.status.code(), Some(2));
    let miss = orthoposet(&[
        "search",
        "--predicate",
        "nfree_but_strict_not_dacey",
        "--max-n",
        "4",
    ]);
    assert_eq!(miss.status.code(), Some(0));
    assert!(miss.stdout.is_empty());
}

#[test]
fn search_all_lists_isomorphism_classes() {
    let out = orthoposet(&[
        "search",
        "--predicate",
        "strict_dacey",
        "--max-n",
        "2",
        "--all",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // empty, singleton, 2-chain, 2-antichain
    assert_eq!(stdout(&out).matches("elements").count(), 4);
}

#[test]
fn generated_files_parse_back() {
    for args in [
        &["generate", "--kind", "chain", "--n", "5"][..],
        &["generate", "--kind", "antichain", "--n", "3"],
        &["generate", "--kind", "n"],
        &["generate", "--kind", "diamond22"],
        &[
            "generate",
            "--kind",
            "random",
            "--n",
            "9",
            "--seed",
            "7",
            "--edge-prob",
            "0.4",
        ],
    ] {
        let out = orthoposet(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let f = poset_file(&stdout(&out));
        let analyzed = orthoposet(&["analyze", f.path().to_str().unwrap()]);
        assert_eq!(analyzed.status.code(), Some(0), "{args:?}");
    }
    let a = orthoposet(&["generate", "--kind", "random", "--n", "9", "--seed", "7"]);
    let b = orthoposet(&["generate", "--kind", "random", "--n", "9", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let diamond = stdout(&orthoposet(&["generate", "--kind", "diamond22"]));
    assert_eq!(diamond.matches("cover").count(), 4);
}
