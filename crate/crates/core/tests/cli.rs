mod common;

use std::fs;
use std::path::Path;
use std::process::Command;

use blbc::cli::{run, Cli};
use blbc::format::PointFile;
use blbc::Point;
use clap::Parser;
use serde_json::Value;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn blbc(args: &[&str]) -> Outcome {
    let cli = Cli::try_parse_from(std::iter::once("blbc").chain(args.iter().copied())).expect("arguments parse");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(cli, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn write_points(path: &Path, pts: &[(i64, i64)]) {
    let file = PointFile::new(pts.iter().map(|&(x, y)| Point::int(x, y)).collect());
    fs::write(path, file.to_json()).unwrap();
}

#[test]
fn generate_six_writes_the_hand_traced_prefix() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    let r = blbc(&["generate", "--count", "6", "--out", p(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let file = PointFile::parse(&fs::read_to_string(&out).unwrap()).unwrap();
    let got: Vec<String> = file.points.iter().map(|q| q.to_string()).collect();
    assert_eq!(got, ["(0, 0)", "(1, 0)", "(0, 1)", "(1/2, 0)", "(0, 1/2)", "(1/2, 1/2)"]);
    assert_eq!(file.metadata.unwrap().steps, Some(3));
}

#[test]
fn generate_edge_counts() {
    let r = blbc(&["generate", "--count", "3"]);
    assert_eq!(r.code, 0);
    assert_eq!(PointFile::parse(&r.stdout).unwrap().points.len(), 3);
    let r = blbc(&["generate", "--count", "2"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("at least 3"));
}

#[test]
fn generate_rejects_bad_seeds_by_index() {
    let dir = tempfile::tempdir().unwrap();
    let seed = dir.path().join("seed.json");
    write_points(&seed, &[(0, 0), (1, 1), (0, 0)]);
    let r = blbc(&["generate", "--count", "5", "--seed", p(&seed)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains('1') && r.stderr.contains('3'), "{}", r.stderr);

    write_points(&seed, &[(0, 0), (1, 1), (2, 2)]);
    let r = blbc(&["generate", "--count", "5", "--seed", p(&seed)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("collinear"), "{}", r.stderr);

    write_points(&seed, &[(0, 0), (3, 0), (0, 3)]);
    let r = blbc(&["generate", "--count", "5", "--seed", p(&seed)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
}

#[test]
fn missing_files_are_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.json");
    assert_eq!(blbc(&["verify", p(&missing)]).code, 3);
    let out = dir.path().join("no-such-dir").join("x.json");
    assert_eq!(blbc(&["generate", "--count", "4", "--out", p(&out)]).code, 3);
}

#[test]
fn verify_four_collinear_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("line.json");
    write_points(&pts, &[(0, 0), (1, 0), (2, 0), (3, 0)]);
    let r = blbc(&["verify", p(&pts)]);
    assert_eq!(r.code, 1);
    let doc: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(doc["passed"], false);
    let first = &doc["checks"][0];
    assert_eq!(first["check"], "no4collinear");
    assert_eq!(first["counterexample"]["indices"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn verify_selector_runs_only_what_was_asked() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.json");
    write_points(&grid, &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]);
    let r = blbc(&["verify", p(&grid), "--checks", "no4collinear"]);
    assert_eq!(r.code, 0);
    let doc: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(doc["checks"].as_array().unwrap().len(), 1);

    let r = blbc(&["verify", p(&grid), "--checks", "unique-triple"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("--trace"));
    let r = blbc(&["verify", p(&grid), "--checks", "bogus"]);
    assert_eq!(r.code, 2);
}

#[test]
fn generate_then_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    for count in 3..=120 {
        let pts = dir.path().join(format!("p{count}.json"));
        let trace = dir.path().join(format!("t{count}.json"));
        let r = blbc(&["generate", "--count", &count.to_string(), "--out", p(&pts), "--trace-out", p(&trace)]);
        assert_eq!(r.code, 0);
        let r = blbc(&["verify", p(&pts), "--trace", p(&trace)]);
        assert_eq!(r.code, 0, "count {count}: {}", r.stdout);
        if count == 50 {
            let doc: Value = serde_json::from_str(&r.stdout).unwrap();
            assert_eq!(doc["checks"].as_array().unwrap().len(), 6);
        }
    }
}

#[test]
fn tampered_trace_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let (pts, trace) = (dir.path().join("p.json"), dir.path().join("t.json"));
    blbc(&["generate", "--count", "10", "--out", p(&pts), "--trace-out", p(&trace)]);
    let text = fs::read_to_string(&trace).unwrap();
    fs::write(&trace, text.replacen("\"excluded_count\": 0", "\"excluded_count\": 99", 1)).unwrap();
    let r = blbc(&["verify", p(&pts), "--trace", p(&trace), "--checks", "exclusion-bound"]);
    assert_eq!(r.code, 1);

    // a trace for a different prefix length is an input error
    blbc(&["generate", "--count", "8", "--trace-out", p(&trace)]);
    let r = blbc(&["verify", p(&pts), "--trace", p(&trace)]);
    assert_eq!(r.code, 2, "{}", r.stderr);
}

#[test]
fn analyze_reports_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("a.json");
    write_points(&f, &[(0, 0), (1, 0), (0, 1)]);
    let r = blbc(&["analyze", p(&f), "--k", "3", "--l", "3"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["outcome"], "CliqueFound");
    assert_eq!(v["clique_witness"], serde_json::json!([1, 2, 3]));

    write_points(&f, &[(0, 0), (1, 1), (2, 2)]);
    let v: Value = serde_json::from_str(&blbc(&["analyze", p(&f), "--k", "3", "--l", "3"]).stdout).unwrap();
    assert_eq!(v["outcome"], "CollinearFound");

    write_points(&f, &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]);
    let v: Value = serde_json::from_str(&blbc(&["analyze", p(&f), "--k", "4", "--l", "4"]).stdout).unwrap();
    assert_eq!(v["outcome"], "CliqueFound");

    assert_eq!(blbc(&["analyze", p(&f), "--k", "1", "--l", "3"]).code, 2);
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let (pts, svg) = (dir.path().join("p.json"), dir.path().join("p.svg"));
    blbc(&["generate", "--count", "6", "--out", p(&pts)]);
    let r = blbc(&["render", p(&pts), "--out", p(&svg), "--edges", "collinear"]);
    assert_eq!(r.code, 0);
    let text = fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<circle").count(), 6);
    assert_eq!(text.matches("<line").count(), 3);

    let empty = dir.path().join("empty.json");
    fs::write(&empty, PointFile::new(Vec::new()).to_json()).unwrap();
    assert_eq!(blbc(&["render", p(&empty), "--out", p(&svg)]).code, 2);
}

#[test]
fn malformed_rationals_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    for (bad, field) in [("2/4", "points[1].y"), ("1/-3", "points[1].y"), ("1/0", "points[1].y")] {
        let text = format!(r#"{{"format_version": 1, "points": [{{"x": "0", "y": "0"}}, {{"x": "1", "y": "{bad}"}}]}}"#);
        fs::write(&f, text).unwrap();
        let r = blbc(&["verify", p(&f)]);
        assert_eq!(r.code, 2, "{bad}");
        assert!(r.stderr.contains(field), "{bad}: {}", r.stderr);
    }
    fs::write(&f, "{\"format_version\": 1,\n \"points\": [1.5]}").unwrap();
    let r = blbc(&["analyze", p(&f), "--k", "3", "--l", "3"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let a = blbc(&["generate", "--count", "40"]).stdout;
    let b = blbc(&["generate", "--count", "40"]).stdout;
    assert_eq!(a, b);
    assert!(a.ends_with('\n'));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_blbc");
    let out = Command::new(bin).args(["generate", "--count", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(PointFile::parse(std::str::from_utf8(&out.stdout).unwrap()).unwrap().points.len(), 5);
    let out = Command::new(bin).args(["generate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
