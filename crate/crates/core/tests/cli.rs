//! Exit codes and file outputs of the command-line tool.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coordfree-alpha")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_empty_instance_writes_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["generate", "--n", "0", "--out", path(dir.path())]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read_to_string(dir.path().join("points.txt")).unwrap(), "0\n");
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let d = path(dir.path());
    assert_eq!(code(&run(&["shape", "--q", "0.3", "--r", "0.25", "--out", d])), 2);
    assert_eq!(code(&run(&["shape", "--points", "/no/such/file", "--out", d])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["verify", "--n", "abc"])), 2);

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "2\n0 0\n").unwrap();
    assert_eq!(code(&run(&["collapse", "--points", path(&bad), "--out", d])), 2);
    let edges = dir.path().join("edges.txt");
    fs::write(&edges, "2 0.5\n0 1 0.4\n").unwrap();
    assert_eq!(code(&run(&["shape", "--edges", path(&edges), "--q", "0.6", "--out", d])), 2);
    assert_eq!(code(&run(&["render", "--edges", path(&edges), "--out", d])), 2);
}

#[test]
fn verify_passes_and_injected_fault_fails() {
    let dir = tempfile::tempdir().unwrap();
    let ok = dir.path().join("ok");
    let out = run(&["verify", "--batch", "5", "--out", path(&ok)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    assert!(ok.join("verify_report.json").exists());
    assert!(ok.join("seeds/seed_000005.json").exists());

    let bad = dir.path().join("bad");
    let out = run(&["verify", "--batch", "2", "--inject-fault", "--out", path(&bad)]);
    assert_eq!(code(&out), 1);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("local_matches_oracle"), "{stdout}");

    assert_eq!(code(&run(&["verify", "--batch", "0", "--out", path(&ok)])), 0);
}

#[test]
fn shape_from_edges_has_no_disk_layer() {
    let dir = tempfile::tempdir().unwrap();
    let d = path(dir.path());
    assert_eq!(code(&run(&["generate", "--seed", "4", "--out", d])), 0);
    let edge_out = dir.path().join("shape_edges");
    let edges = dir.path().join("edges.txt");
    assert_eq!(code(&run(&["shape", "--edges", path(&edges), "--q", "0.2", "--out", path(&edge_out)])), 0);
    assert!(edge_out.join("shape.json").exists());
    assert!(!edge_out.join("shape.svg").exists());

    let point_out = dir.path().join("shape_points");
    let points = dir.path().join("points.txt");
    let out = run(&["shape", "--points", path(&points), "--q", "0.2", "--out", path(&point_out)]);
    assert_eq!(code(&out), 0);
    let svg = fs::read_to_string(point_out.join("shape.svg")).unwrap();
    assert!(svg.contains("id=\"disks\"") && svg.contains("id=\"boundary\""));

    // same boundary from coordinates and from distances alone
    let json = |p: &Path| -> serde_json::Value {
        serde_json::from_str(&fs::read_to_string(p.join("shape.json")).unwrap()).unwrap()
    };
    assert_eq!(json(&edge_out)["boundary_edges"], json(&point_out)["boundary_edges"]);
}

#[test]
fn collapse_writes_trace_and_complexes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["collapse", "--seed", "2", "--out", path(dir.path())]);
    assert_eq!(code(&out), 0);
    let trace = fs::read_to_string(dir.path().join("collapse.txt")).unwrap();
    assert!(trace.lines().all(|l| l.starts_with("collapse e(") && l.contains(" t(")));
    let alpha = fs::read_to_string(dir.path().join("alpha.txt")).unwrap();
    assert!(alpha.lines().next().unwrap().starts_with("v "));
}
