use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use precolor_core::generator::fixture;
use tempfile::TempDir;

fn precolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_precolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_fixture(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.pg"));
    fs::write(&path, fixture(name).unwrap().to_text()).unwrap();
    path
}

#[test]
fn extend_hex_quad_antipodal_is_blocked() {
    let dir = TempDir::new().unwrap();
    let f = write_fixture(dir.path(), "HEX_QUAD");
    let o = precolor(&["extend", f.to_str().unwrap(), "--coloring", "1,2,3,1,2,3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("verdict NOT_EXTENDS"));
}

#[test]
fn extend_prints_a_full_witness() {
    let dir = TempDir::new().unwrap();
    let f = write_fixture(dir.path(), "HEX_QUAD");
    let o = precolor(&["extend", f.to_str().unwrap(), "--coloring", "1,2,1,2,1,2"]);
    let out = stdout(&o);
    assert!(out.starts_with("verdict EXTENDS\n"));
    assert_eq!(
        out.lines()
            .filter(|l| l.starts_with("witness color"))
            .count(),
        7
    );
    assert!(out.contains("witness color 1 1\n"));
}

#[test]
fn witness_accepts_a_coloring_file() {
    let dir = TempDir::new().unwrap();
    let f = write_fixture(dir.path(), "C8_CHORD");
    let c = dir.path().join("psi.txt");
    let lines: String = [1, 2, 3, 1, 2, 3, 1, 2]
        .iter()
        .enumerate()
        .map(|(i, c)| format!("color {} {c}\n", i + 1))
        .collect();
    fs::write(&c, lines).unwrap();
    let o = precolor(&[
        "witness",
        f.to_str().unwrap(),
        "--coloring",
        c.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 8);
}

#[test]
fn classify_eight_cycle_fixtures() {
    let dir = TempDir::new().unwrap();
    for (name, class) in [
        ("C8_CHORD", "class C"),
        ("F3_CASE_B", "class B"),
        ("F4_CASE_C", "class C"),
        ("C8_CASE_D", "class D"),
    ] {
        let f = write_fixture(dir.path(), name);
        let o = precolor(&["classify", f.to_str().unwrap()]);
        assert_eq!(stdout(&o).lines().next(), Some(class), "{name}");
    }
}

#[test]
fn classify_seven_cycle_reports_cases() {
    let dir = TempDir::new().unwrap();
    let f = write_fixture(dir.path(), "C7_CASE_B");
    let out = stdout(&precolor(&["classify", f.to_str().unwrap()]));
    assert!(out.starts_with("class CRITICAL\n"));
    assert!(out
        .lines()
        .filter(|l| l.starts_with("coloring"))
        .all(|l| l.contains("case b")));
}

#[test]
fn faces_and_critical() {
    let dir = TempDir::new().unwrap();
    let f = write_fixture(dir.path(), "C8_CHORD");
    let out = stdout(&precolor(&["faces", f.to_str().unwrap()]));
    assert!(out.ends_with("S {5,5}\n"));
    let out = stdout(&precolor(&["critical", f.to_str().unwrap()]));
    assert!(out.starts_with("critical yes\n"));
}

#[test]
fn enumerate_streams_separated_graphs() {
    let o = precolor(&["enumerate", "--k", "6", "--budget", "1"]);
    assert!(o.status.success());
    let graphs = precolor_core::plane_graph::parse_graph_stream(&stdout(&o)).unwrap();
    assert_eq!(graphs.len(), 6);
}

#[test]
fn crosscheck_small_corpus() {
    let o = precolor(&["crosscheck", "--k", "6,7", "--budget", "2", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("mismatches 0\n"));
}

#[test]
fn crosscheck_is_deterministic_across_thread_counts() {
    let a = precolor(&["crosscheck", "--k", "8", "--budget", "2", "--jobs", "1"]);
    let b = precolor(&["crosscheck", "--k", "8", "--budget", "2", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_input_exits_one() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("bad.pg");
    fs::write(&f, "vertices 3\nouter 1 2\n").unwrap();
    assert_eq!(
        precolor(&["faces", f.to_str().unwrap()]).status.code(),
        Some(1)
    );
    let g = write_fixture(dir.path(), "HEX_QUAD");
    let o = precolor(&["extend", g.to_str().unwrap(), "--coloring", "1,1,2,1,2,3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(precolor(&["crosscheck", "--k", "9"]).status.code(), Some(1));
    assert_eq!(precolor(&["nonsense"]).status.code(), Some(1));
}
