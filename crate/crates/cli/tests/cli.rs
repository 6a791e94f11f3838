//! Runs the `nilcomplex` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nilcomplex"));
    cmd.args(args).env_remove("NILCOMPLEX_CACHE");
    if let Some(dir) = cache {
        cmd.env("NILCOMPLEX_CACHE", dir);
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

/// Text form of a raw letter from the relation dump.
fn letter_text(raw: u64) -> String {
    let tag = ["X", "Y", "Z"][(raw >> 30) as usize];
    format!("{tag}{}", raw & ((1 << 30) - 1))
}

#[test]
fn build_reports_the_level_two_shape() {
    let out = run(&["build", "--level", "2"], None);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 11);
    assert_eq!(v["edges"].as_array().unwrap().len(), 16);
    assert_eq!(v["faces"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(run(&["build", "--level", "9"], None).status.code(), Some(2));
    assert_eq!(run(&["build", "--pasting-mode", "sideways"], None).status.code(), Some(2));
    assert_eq!(run(&["export-dot", "--level", "2", "--plane", "7"], None).status.code(), Some(2));
}

#[test]
fn determinism_check_passes_at_level_three() {
    let out = run(&["verify-determinism", "--level", "3"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains(" 0 conflicts"));
}

#[test]
fn relation_dumps_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    for p in [&a, &b] {
        let out = run(&["relations", "--level", "3", "--workers", "2", "--out", p.to_str().unwrap()], None);
        assert!(out.status.success());
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!x.is_empty());
    assert_eq!(x, y);
}

#[test]
fn label_dump_is_repeatable() {
    let a = run(&["label", "--level", "3"], None);
    let b = run(&["label", "--level", "3"], None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["vertices"].as_array().unwrap().len(), 45);
}

#[test]
fn cache_directory_is_filled_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let first = run(&["build", "--level", "3"], Some(dir.path()));
    assert!(first.status.success());
    let cached = dir.path().join("complex-3-recursive-1000000.json");
    assert!(cached.exists());
    let second = run(&["build", "--level", "3"], Some(dir.path()));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn reduce_and_nil_check_read_words_and_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let rels = dir.path().join("rels.jsonl");
    assert!(run(&["relations", "--level", "3", "--out", rels.to_str().unwrap()], None).status.success());
    let first = std::fs::read_to_string(&rels).unwrap();
    let line: serde_json::Value = serde_json::from_str(first.lines().next().unwrap()).unwrap();
    let word: Vec<String> = line["lhs"].as_array().unwrap().iter().map(|v| letter_text(v.as_u64().unwrap())).collect();
    let wfile = dir.path().join("w.txt");
    std::fs::write(&wfile, word.join(" ")).unwrap();
    let (w, r) = (wfile.to_str().unwrap(), rels.to_str().unwrap());

    let out = run(&["reduce", "--level", "3", "--word", w, "--relations", r], None);
    assert!(out.status.success());
    assert!(json(&out).get("Canonical").is_some());

    let out = run(&["nil-check", "--level", "3", "--word", w, "--k", "1"], None);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("verdict:"));

    std::fs::write(&wfile, "Y1 Q2").unwrap();
    assert_eq!(run(&["reduce", "--level", "2", "--word", w], None).status.code(), Some(2));
}

#[test]
fn census_emits_table_comparison() {
    let out = run(&["census", "--level", "3"], None);
    assert!(out.status.success());
    let v = json(&out);
    assert!(v["diff"].as_array().unwrap().iter().any(|d| d["table"] == 2));
}

#[test]
fn dot_export_lists_the_base_plane() {
    let out = run(&["export-dot", "--level", "2"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph plane0"));
    assert_eq!(text.matches(" -- ").count(), 16);
}
