//! End-to-end checks of the binary: flags, exit codes, output shapes.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_contour-sim"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn simulate_prints_the_walk() {
    let out = run(&[
        "simulate", "--n", "10", "--l1", "1", "--l2", "2", "--d", "3", "--init", "4,0", "--steps", "10",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("(4,0) -> (5,1)"));
    assert!(text.trim_end().ends_with("(3,9) -> (4,0)"));
}

#[test]
fn orbit_reports_period_and_speeds() {
    let out = run(&["orbit", "--n", "12", "--l1", "2", "--l2", "4", "--d", "4", "--init", "6,0"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["period"], 14);
    assert_eq!(doc["moves"][0], 12);
    assert_eq!(doc["velocities"][0], "6/7");
    assert_eq!(doc["cycle"].as_array().unwrap().len(), 14);
}

#[test]
fn validation_failures_exit_2_with_clean_stdout() {
    let out = run(&["orbit", "--n", "12", "--l1", "0", "--l2", "4", "--d", "4", "--init", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("LengthOutOfRange"), "{err}");

    let out = run(&["orbit", "--n", "12", "--l1", "4", "--l2", "6", "--d", "4", "--init", "2,6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("UnacceptableState"), "{err}");

    let out = run(&["orbit", "--n", "12", "--l1", "2", "--l2", "4", "--d", "4", "--init", "99,0"]);
    assert_eq!(out.status.code(), Some(2));

    // unknown flag: usage error from the parser
    let out = run(&["orbit", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spectrum_lists_entries_in_order() {
    let out = run(&["spectrum", "--n", "12", "--l1", "2", "--l2", "4", "--d", "4"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["scenario"], "S2_FreeOrV1");
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["velocities"][0], "6/7");
    assert_eq!(entries[1]["velocities"][0], "1/1");
}

#[test]
fn verify_emits_all_entries() {
    let out = run(&["verify", "--n", "10", "--l1", "1", "--l2", "2", "--d", "3"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["entries"].as_array().unwrap().len(), 29);
    let t1 = &doc["entries"].as_array().unwrap()[4];
    assert_eq!(t1["id"], "T1");
    assert_eq!(t1["verdict"], "Match");
}

#[test]
fn replay_examples_exits_zero() {
    let out = run(&["replay-examples"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("all sequences replay exactly"), "{text}");
}

#[test]
fn sweep_writes_csv_and_json() {
    let out = run(&["sweep", "--n", "8", "--d", "2", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("l1,l2,scenario,spectrum\n1,1,"));

    let dir = std::env::temp_dir().join(format!("contour-sweep-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("grid.json");
    let out = run(&["sweep", "--n", "8", "--d", "2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["cells"].as_array().unwrap().len(), 28);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["spectrum", "--n", "12", "--l1", "2", "--l2", "11", "--d", "3"],
        vec!["orbit", "--n", "18", "--l1", "4", "--l2", "7", "--d", "4", "--init", "4,4"],
        vec!["verify", "--n", "12", "--l1", "3", "--l2", "6", "--d", "4"],
        vec!["sweep", "--n", "10", "--d", "2", "--format", "csv"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "non-deterministic output for {args:?}");
    }
}
