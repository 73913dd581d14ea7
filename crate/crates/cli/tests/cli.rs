use std::process::Command;

use bgawc::report::Report;
use bgawc::{entry_for, parse_group, run_corpus, CorpusEntry, RunConfig};
use serde_json::Value;

fn schema() -> jsonschema::JSONSchema {
    let text = include_str!("../schema/report.schema.json");
    let value: Value = serde_json::from_str(text).unwrap();
    jsonschema::JSONSchema::compile(&value).unwrap()
}

fn small_config(groups: &[&str]) -> RunConfig {
    RunConfig {
        entries: groups.iter().map(|g| entry_for(g)).collect(),
        ..RunConfig::default()
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bgawc"))
}

#[test]
fn group_file_gives_s3() {
    let dir = std::env::temp_dir().join(format!("bgawc-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.group");
    std::fs::write(&path, "3\n(1 2 3)\n(1 2)\n").unwrap();
    let g = parse_group(path.to_str().unwrap(), 360).unwrap();
    assert_eq!(g.order(), 6);
    assert_eq!(g.class_count(), 3);

    std::fs::write(&path, "3\n(1 2 4)\n").unwrap();
    let err = parse_group(path.to_str().unwrap(), 360).unwrap_err().to_string();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn builtin_orders() {
    assert_eq!(parse_group("symmetric 3", 360).unwrap().order(), 6);
    assert_eq!(parse_group("SL(2,3)", 360).unwrap().order(), 24);
    assert!(parse_group("symmetric 6", 360).is_err());
}

#[test]
fn empty_corpus_gives_empty_report() {
    let r = run_corpus(&small_config(&[])).unwrap();
    assert!(r.cases.is_empty() && r.censuses.is_empty() && r.failures.is_empty());
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn over_guard_entry_is_flagged_and_others_run() {
    let r = run_corpus(&small_config(&["S3", "symmetric 6"])).unwrap();
    assert_eq!(r.failures.len(), 1);
    assert_eq!(r.failures[0].kind, "guard");
    assert_eq!(r.failures[0].group, "symmetric 6");
    assert_eq!(r.censuses.len(), 2);
    assert!(r.cases.iter().all(|c| c.holds));
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn report_validates_and_round_trips() {
    let r = run_corpus(&small_config(&["S3", "A4", "C7"])).unwrap();
    let json = r.to_json();
    let value: Value = serde_json::from_str(&json).unwrap();
    let schema = schema();
    if let Err(errors) = schema.validate(&value) {
        panic!("{:?}", errors.map(|e| e.to_string()).collect::<Vec<_>>());
    }
    assert_eq!(Report::from_json(&json).unwrap(), r);
    for c in &r.cases {
        assert!(c.ledger_matches(), "{c:?}");
    }
    // A broken document is rejected.
    let mut bad = value.clone();
    bad["cases"][0]["holds"] = Value::from("yes");
    assert!(!schema.is_valid(&bad));
}

#[test]
fn single_passing_case_reports_holds() {
    let mut config = small_config(&["C2"]);
    config.entries[0] = CorpusEntry::builtin("C2", "cyclic 2");
    let r = run_corpus(&config).unwrap();
    assert!(!r.cases.is_empty());
    let json: Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(json["cases"][0]["holds"], Value::Bool(true));
    assert!(r.to_markdown().contains("| C2 | 2 |"));
}

#[test]
fn binary_exit_codes() {
    let out = bin().args(["verify", "--group", "S3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("weight-equation"));

    let out = bin().args(["verify", "--group", "no such group"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["verify", "--group", "S3", "--prime", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["verify", "--group", "A5", "--max-order", "30"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin()
        .args(["blocks", "--group", "C7", "--prime", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("7 blocks"));

    let out = bin()
        .args(["chains", "--group", "S3", "--prime", "3", "--family", "normal"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0<1 length 1"));
}

#[test]
fn report_command_writes_files() {
    let dir = std::env::temp_dir().join(format!("bgawc-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json = dir.join("r.json");
    let md = dir.join("r.md");
    let out = bin()
        .args(["report", "--group", "C3", "--group", "S3", "--seed", "7"])
        .arg("--json")
        .arg(&json)
        .arg("--markdown")
        .arg(&md)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = Report::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(r.seed, 7);
    assert!(std::fs::read_to_string(&md).unwrap().contains("## Block census"));
}

#[test]
fn payload_ignores_timings_only() {
    let a = run_corpus(&small_config(&["S4"])).unwrap();
    let mut b = run_corpus(&RunConfig {
        threads: Some(2),
        ..small_config(&["S4"])
    })
    .unwrap();
    assert_eq!(a.payload(), b.payload());
    b.seed = 1;
    assert_ne!(a.payload(), b.payload());
}
