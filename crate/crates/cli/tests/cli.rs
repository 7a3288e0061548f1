use std::path::Path;
use std::process::{Command, Output};

use artin_epi::report::flatten;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_artin-epi"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let code = out.status.code().expect("exit code");
    let value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr)));
    (code, value)
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

#[test]
fn reports_validate_against_schema() {
    let v = schema();
    let cases: &[&[&str]] = &[
        &["group-info", "--type", "H3"],
        &["verify-catalog", "--type", "B", "--rank", "4", "--samples", "20"],
        &["census", "--case", "h3"],
        &["census", "--case", "small:B3"],
        &["obstruct", "--type", "B3", "--nu", "nu1", "--probe", "paper", "--reproduce"],
        &["census", "--case", "h4"],
    ];
    for args in cases {
        let (_, report) = json(args);
        let errors: Vec<String> = v.iter_errors(&report).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["census", "--case", "h3"]).status.code(), Some(0));
    assert_eq!(run(&["census", "--case", "rank2:7"]).status.code(), Some(0));
    assert_eq!(run(&["census", "--case", "h4"]).status.code(), Some(1));
    for bad in [
        &["group-info", "--type", "E8"][..],
        &["census", "--case", "e8"],
        &["census", "--case", "e7"],
        &["census", "--case", "nonsense"],
        &["group-info", "--type", "Q3"],
        &["obstruct", "--type", "B4", "--nu", "nu2"],
        &["obstruct", "--type", "B3", "--nu", "nu1", "--edge", "1,9"],
        &["obstruct", "--type", "A3", "--nu", "standard", "--probe", "paper"],
    ] {
        let out = run(bad);
        assert_eq!(out.status.code(), Some(2), "{bad:?}");
        assert!(!out.stderr.is_empty(), "{bad:?} prints a message");
    }
}

#[test]
fn group_info_examples() {
    let (code, r) = json(&["group-info", "--type", "H3"]);
    assert_eq!(code, 0);
    assert_eq!(r["data"]["order"], 120);
    assert_eq!(r["data"]["reflections"], 15);
    assert_eq!(r["data"]["conjugacy_classes"], 10);
    let (_, r) = json(&["group-info", "--type", "I2", "--m", "4"]);
    assert_eq!(r["data"]["order"], 8);
    let (_, r) = json(&["group-info", "--type", "D5"]);
    assert_eq!(r["data"]["order"], 1920);
}

#[test]
fn obstruct_examples() {
    let (code, r) = json(&["obstruct", "--type", "B", "--rank", "5", "--nu", "nu1"]);
    assert_eq!((code, r["data"]["verdict"].as_str()), (0, Some("contradiction")));
    let (code, r) = json(&["obstruct", "--type", "B", "--rank", "4", "--nu", "standard"]);
    assert_eq!((code, r["data"]["verdict"].as_str()), (0, Some("undecided")));
    let (_, r) = json(&["obstruct", "--type", "H3", "--nu", "nu1", "--reproduce"]);
    assert_eq!(r["status"], "match");
    assert_eq!(r["data"]["reproduction"]["table_matches"], 30);
}

fn digest(args: &[&str]) -> String {
    let (code, r) = json(args);
    assert_eq!(code, 0, "{args:?}");
    r["manifest"]["result_digest"].as_str().unwrap().to_string()
}

#[test]
fn digests_are_deterministic_across_runs_and_threads() {
    let max = std::thread::available_parallelism().map_or(1, |n| n.get()).to_string();
    for case in ["f4", "small:B4", "zinde:B:4"] {
        let base = digest(&["census", "--case", case]);
        assert_eq!(base, digest(&["census", "--case", case]), "{case} repeated");
        for threads in ["1", "4", max.as_str()] {
            assert_eq!(base, digest(&["--threads", threads, "census", "--case", case]), "{case} with {threads} threads");
        }
    }
}

#[test]
fn seed_changes_only_randomized_checks() {
    let a = digest(&["--seed", "1", "verify-catalog", "--type", "H3", "--samples", "30"]);
    let b = digest(&["--seed", "1", "verify-catalog", "--type", "H3", "--samples", "30"]);
    let c = digest(&["--seed", "2", "verify-catalog", "--type", "H3", "--samples", "30"]);
    assert_eq!(a, b);
    assert_ne!(a, c, "the seed is part of the parameters");
}

#[test]
fn text_and_json_carry_the_same_values() {
    for args in [&["census", "--case", "f4"][..], &["obstruct", "--type", "D5", "--nu", "nu1", "--probe", "paper", "--reproduce"]] {
        let (_, report) = json(args);
        let text = String::from_utf8(run(args).stdout).unwrap();
        let text_lines: Vec<&str> = text.lines().filter(|l| l.starts_with("data") || l.starts_with("checks")).collect();
        let mut leaves = Vec::new();
        flatten("data", &report["data"], &mut leaves);
        flatten("checks", &report["checks"], &mut leaves);
        let json_lines: Vec<String> = leaves.iter().map(|(p, v)| format!("{p} = {v}")).collect();
        let mut a: Vec<&str> = text_lines.clone();
        let mut b: Vec<&str> = json_lines.iter().map(String::as_str).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (_, first) = json(&["--cache-dir", d, "census", "--case", "small:B3"]);
    let (_, second) = json(&["--cache-dir", d, "census", "--case", "small:B3"]);
    let (_, uncached) = json(&["census", "--case", "small:B3"]);
    let c1 = &first["manifest"]["group_cache"][0];
    let c2 = &second["manifest"]["group_cache"][0];
    assert_eq!((c1["hit"].as_bool(), c2["hit"].as_bool()), (Some(false), Some(true)));
    assert_eq!(c1["sha256"], c2["sha256"]);
    assert_eq!(first["manifest"]["result_digest"], second["manifest"]["result_digest"]);
    assert_eq!(first["data"], uncached["data"]);
    assert!(dir.path().join("B3.wgc").exists());

    // A damaged cache file is replaced, not trusted.
    let path = dir.path().join("B3.wgc");
    let mut bytes = std::fs::read(&path).unwrap();
    let mid = bytes.len() / 2;
    bytes[mid] ^= 0xff;
    std::fs::write(&path, bytes).unwrap();
    let (code, third) = json(&["--cache-dir", d, "census", "--case", "small:B3"]);
    assert_eq!(code, 0);
    assert_eq!(third["manifest"]["group_cache"][0]["hit"], false);
    assert_eq!(third["data"], first["data"]);
}

#[test]
fn output_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["--format", "json", "-o", path.to_str().unwrap(), "census", "--case", "h3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["data"]["x2"], 10);
}
