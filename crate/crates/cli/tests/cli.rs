use std::path::Path;
use std::process::Command;

use hypertri_cli::verify::{cmd_verify_with_fault, Fault};
use hypertri_cli::{cmd_count, cmd_verify, CensusReport, CliError, OutputFormat, RunConfig, VerifyConfig};
use proptest::prelude::*;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hypertri"))
}

fn write(dir: &Path, name: &str, text: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn json_report(dir: &Path, text: &str) -> serde_json::Value {
    let input = write(dir, "in.txt", text);
    let out = bin().args(["count", input.to_str().unwrap(), "--out", "json"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn triangle_and_path_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let v = json_report(dir.path(), "1 2\n2 3\n1 3\n");
    assert_eq!(v["counts"]["17"], 1);
    assert_eq!(v["totals"]["closed"], 1);
    assert_eq!(v["stats"]["kappa"], 2);
    let v = json_report(dir.path(), "1 2\n2 3\n3 4\n");
    assert_eq!(v["counts"]["25"], 1);
    assert_eq!(v["totals"]["open"], 1);
    let keys: Vec<&String> = v["counts"].as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 26);
}

#[test]
fn json_schema_has_every_block() {
    let dir = tempfile::tempdir().unwrap();
    let v = json_report(dir.path(), "1 2 3\n2 3 4\n# comment\n\n5 5\n1 2 3\n");
    for key in ["stats", "counts", "totals", "shares", "timings", "work", "ingest"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    for key in ["n", "m", "h", "rank", "max_degree", "kappa"] {
        assert!(v["stats"].get(key).is_some(), "missing stats.{key}");
    }
    assert_eq!(v["ingest"]["duplicates_removed"], 1);
    assert_eq!(v["ingest"]["singletons_removed"], 1);
    assert_eq!(v["ingest"]["comment_lines_skipped"], 1);
    assert!(v["timings"].get("open_patterns").is_some());
}

#[test]
fn json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.txt", "1 2 3\n2 3 4\n3 4 5\n1 5\n2 4\n1 2\n");
    let output = dir.path().join("report.json");
    let report = cmd_count(&RunConfig {
        input,
        format: OutputFormat::Json,
        output: Some(output.clone()),
        ..Default::default()
    })
    .unwrap();
    let back: CensusReport = serde_json::from_str(&std::fs::read_to_string(output).unwrap()).unwrap();
    assert_eq!(back, report);
}

#[test]
fn csv_and_text_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.txt", "1 2\n1 3\n1 4\n");
    let out = bin().args(["count", input.to_str().unwrap(), "--out", "csv"]).output().unwrap();
    let csv = String::from_utf8(out.stdout).unwrap();
    assert_eq!(csv.lines().count(), 27);
    assert!(csv.contains("\n9,star,closed,1\n"));
    let out = bin().args(["count", input.to_str().unwrap()]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("closed = 1  open = 0"));
    assert!(text.contains("pattern 9 = 100.0% of closed"));
}

#[test]
fn parse_error_exits_2_and_leaves_no_output() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.txt", "1 2\n3 x\n");
    let output = dir.path().join("report.json");
    let out = bin()
        .args(["count", input.to_str().unwrap(), "--output", output.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert!(!output.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn missing_file_and_empty_input() {
    let out = bin().args(["count", "/nonexistent/file.txt"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "empty.txt", "# nothing\n7\n");
    let out = bin().args(["count", input.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["count", input.to_str().unwrap(), "--allow-empty"]).output().unwrap();
    assert!(out.status.success());
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn distribution_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("1 2\n1 3\n1 4\n", "value,count\n1,3\n3,1\n", "value,count\n0,1\n1,3\n"),
        ("1 2\n2 3\n1 3\n", "value,count\n2,3\n", "value,count\n0,1\n1,1\n2,1\n"),
        ("", "value,count\n", "value,count\n"),
    ];
    for (i, (text, degrees, outdegrees)) in cases.into_iter().enumerate() {
        let input = write(dir.path(), &format!("in{i}.txt"), text);
        let dumps = dir.path().join(format!("dumps{i}"));
        cmd_count(&RunConfig {
            input,
            output: Some(dir.path().join(format!("r{i}.txt"))),
            dump_degrees: Some(dumps.clone()),
            allow_empty: true,
            ..Default::default()
        })
        .unwrap();
        assert_eq!(read(&dumps.join("degree_dist.csv")), degrees);
        assert_eq!(read(&dumps.join("outdegree_dist.csv")), outdegrees);
    }
}

#[test]
fn edge_degree_dump() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.txt", "1 2\n1 2 3\n3 4\n");
    let path = dir.path().join("edges.csv");
    let out = bin()
        .args([
            "count",
            input.to_str().unwrap(),
            "--dump-edge-degrees",
            path.to_str().unwrap(),
            "--output",
            dir.path().join("r.txt").to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        read(&path),
        "edge,arity,d_prime,d_anc,d_desc,d_int\n0,2,1,1,0,0\n1,3,2,0,1,1\n2,2,1,0,0,1\n"
    );
}

#[test]
fn unwritable_dump_directory_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.txt", "1 2\n");
    let blocker = write(dir.path(), "file", "");
    let out = bin()
        .args(["count", input.to_str().unwrap(), "--dump-degrees", blocker.join("sub").to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_default_battery_passes() {
    let summary = cmd_verify(&VerifyConfig::default()).unwrap();
    assert_eq!(summary.instances, 200);
    let out = bin().args(["verify", "--instances", "20"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("20 instances"));
}

#[test]
fn injected_fault_is_reported_with_a_reproducer() {
    let config = VerifyConfig {
        instances: 10,
        ..Default::default()
    };
    let err = cmd_verify_with_fault(&config, Fault { instance: 4, pattern: 9 }).unwrap_err();
    assert_eq!(err.exit_code(), 1);
    let CliError::VerifyFailed(msg) = err else { panic!("{err}") };
    assert!(msg.starts_with("instance 4: census mismatch"));
    assert!(msg.contains("--- instance"));
    assert!(msg.contains("--- pipeline ---"));
    assert!(msg.contains("--- oracle ---"));
}

#[test]
fn guard_refusal_is_a_configuration_error() {
    let err = cmd_verify(&VerifyConfig {
        max_n: 64,
        ..Default::default()
    })
    .unwrap_err();
    assert!(matches!(err, CliError::Config(_)));
    let out = bin().args(["verify", "--max-m", "100000"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pattern_table_dump() {
    let out = bin().args(["patterns", "--dump-table"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 27);
    assert!(text.lines().nth(17).unwrap().starts_with("17,"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn report_json_round_trips(edges in prop::collection::vec(prop::collection::vec(0u64..12, 2..5), 1..20)) {
        let text: String = edges.iter()
            .map(|e| e.iter().map(u64::to_string).collect::<Vec<_>>().join(" ") + "\n")
            .collect();
        let (g, ingest) = hypertri_core::Hypergraph::from_labeled_edges(edges);
        let census = hypertri_core::count_all(&g).unwrap();
        let report = CensusReport::new(g.stats(), &census, ingest);
        let json = report.render(OutputFormat::Json);
        let back: CensusReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &report);
        prop_assert_eq!(back.totals.closed + back.totals.open, report.counts.0.iter().sum::<u64>());
        prop_assert!((0.0..=1.0).contains(&back.shares.p9_closed));
        prop_assert!((0.0..=1.0).contains(&back.shares.p26_open));
        prop_assert!(!text.is_empty());
    }
}
