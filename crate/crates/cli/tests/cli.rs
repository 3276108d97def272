use std::process::{Command, Output};

use fsl_cli::{Failure, Kind, PolytopeDocument, EXIT_GATE};
use fsl_core::Error;

fn fsl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fsl"))
        .args(args)
        .env_remove("FSL_THREADS")
        .output()
        .expect("run fsl")
}

fn document(args: &[&str]) -> PolytopeDocument {
    let out = fsl(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc: PolytopeDocument = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc.is_well_formed());
    assert_eq!(doc.to_json().as_bytes(), out.stdout.as_slice());
    doc
}

#[test]
fn fflv_points_documents() {
    let doc = document(&[
        "fflv", "points", "--type", "A", "--rank", "3", "--weight", "0,1,0",
    ]);
    assert_eq!(doc.kind, Kind::Fflv);
    assert_eq!(doc.points.len(), 6);
    assert_eq!(doc.labels.len(), 6);
    assert!(doc.word.is_none());

    let doc = document(&[
        "fflv", "points", "--type", "A", "--rank", "1", "--weight", "0",
    ]);
    assert_eq!(doc.points, vec![vec![0]]);

    let doc = document(&[
        "fflv", "points", "--type", "C", "--rank", "2", "--weight", "0,1",
    ]);
    assert_eq!(doc.points.len(), 5);
}

#[test]
fn string_points_documents() {
    let doc = document(&[
        "stringpoly",
        "points",
        "--type",
        "A",
        "--rank",
        "2",
        "--weight",
        "1,0",
    ]);
    assert_eq!(doc.kind, Kind::String);
    assert_eq!(doc.points.len(), 3);
    assert_eq!(doc.word, Some(vec![2, 3, 1]));

    let doc = document(&[
        "stringpoly",
        "points",
        "--type",
        "C",
        "--rank",
        "2",
        "--weight",
        "0,0",
    ]);
    assert_eq!(doc.points, vec![vec![0; 4]]);

    let doc = document(&[
        "stringpoly",
        "points",
        "--type",
        "C",
        "--rank",
        "3",
        "--weight",
        "0,1,0",
    ]);
    assert_eq!(doc.points.len(), 14);
}

#[test]
fn barred_labels_serialize_with_a_flag() {
    let out = fsl(&[
        "fflv", "points", "--type", "C", "--rank", "2", "--weight", "1,0",
    ]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let barred: Vec<&serde_json::Value> = value["labels"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|l| l["barred"] == true)
        .collect();
    assert_eq!(barred.len(), 1);
    assert_eq!(barred[0]["row"], 1);
    assert_eq!(barred[0]["col"], 1);
    let keys: Vec<&String> = value.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["kind", "labels", "points", "rank", "type", "weight"]);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("points.json");
    let args = [
        "fflv", "points", "--type", "A", "--rank", "2", "--weight", "1,1",
    ];
    let stdout = fsl(&args).stdout;
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let out = fsl(&with_out);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec![
            "fflv", "points", "--type", "B", "--rank", "2", "--weight", "1,0",
        ],
        vec![
            "fflv", "points", "--type", "A", "--rank", "2", "--weight", "1",
        ],
        vec![
            "fflv", "points", "--type", "A", "--rank", "2", "--weight", "1,-1",
        ],
        vec![
            "fflv", "points", "--type", "A", "--rank", "0", "--weight", "",
        ],
        vec!["verify", "unimodular", "--max-rank", "0"],
        vec!["verify", "main", "--type", "A", "--rank", "2"],
        vec!["frobnicate"],
    ] {
        let out = fsl(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn gate_failures_map_to_exit_three() {
    let f = Failure::from(Error::Gate {
        gate: "unimodular",
        detail: "det 2".into(),
    });
    assert_eq!(f.code, EXIT_GATE);
    assert!(f.message.contains("unimodular"));
}

#[test]
fn verify_main_passes_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = fsl(&[
        "verify",
        "main",
        "--type",
        "A",
        "--rank",
        "2",
        "--max-level",
        "2",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 6);
    assert!(reports
        .iter()
        .all(|r| r["status"] == "pass" && r["equal"] == true));
    assert!(reports.iter().all(|r| r["fflv_count"] == r["weyl_dim"]));

    let out = fsl(&[
        "verify",
        "main",
        "--type",
        "C",
        "--rank",
        "2",
        "--max-level",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("1/1 cases passed"));
}

#[test]
fn corrupted_fixture_fails_with_witness() {
    let out = fsl(&[
        "verify",
        "main",
        "--type",
        "A",
        "--rank",
        "2",
        "--max-level",
        "1",
        "--corrupt-fixture",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("missing (1 total): [[0, 1, 0]]"), "{text}");
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let run = |threads: &str, name: &str| {
        let path = dir.path().join(name);
        let out = Command::new(env!("CARGO_BIN_EXE_fsl"))
            .args([
                "verify",
                "main",
                "--type",
                "A",
                "--rank",
                "3",
                "--max-level",
                "2",
                "--json",
            ])
            .arg(&path)
            .env("FSL_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        std::fs::read(path).unwrap()
    };
    let one = run("1", "one.json");
    assert_eq!(one, run("4", "four.json"));
    assert_eq!(one, run("1", "again.json"));
}

#[test]
fn property_sweeps() {
    let out = fsl(&["verify", "unimodular", "--max-rank", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 20);
    assert!(text.lines().all(|l| l.ends_with("ok")));

    let out = fsl(&["verify", "fold", "--max-rank", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout)
            .unwrap()
            .matches("equal")
            .count(),
        10
    );

    let out = fsl(&["verify", "comm", "--max-rank", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("A5: 125 triples (i, l, j), 0 inconsistent"));
    assert!(text.contains("  ~.~~~\n  .~.~~\n  ~.~.~\n  ~~.~.\n  ~~~.~\n"));
}
