//! End-to-end tests of the `numrange` binary: argument handling, both input
//! channels and formats, exit codes, determinism, and output schemas.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numrange"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_numrange"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("write to child");
    child.wait_with_output().expect("binary finishes")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(stdout_of(out).trim()).expect("stdout is JSON")
}

const WIDE: &str = "1,0,4,0,0,0,-1,0";

// ── range ───────────────────────────────────────────────────────────────────

#[test]
fn range_reports_the_wide_ellipse() {
    let out = run(&["range", "--matrix", WIDE]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["kind"], "ellipse");
    assert!((doc["semi_major"].as_f64().unwrap() - 5.0f64.sqrt()).abs() <= 1e-15);
    assert_eq!(doc["semi_minor"].as_f64().unwrap(), 2.0);
    assert_eq!(doc["orientation"].as_f64().unwrap(), 0.0);
    assert_eq!(doc["foci"][0]["re"].as_f64().unwrap(), 1.0);
    assert_eq!(doc["foci"][1]["re"].as_f64().unwrap(), -1.0);
}

#[test]
fn range_classifies_degenerate_kinds() {
    let point = run(&["range", "--matrix", "3,1,0,0,0,0,3,1"]);
    assert_eq!(json_of(&point)["kind"], "point");

    let segment = run(&["range", "--matrix", "1,0,0,0,0,0,-1,0"]);
    assert_eq!(json_of(&segment)["kind"], "segment");

    let disk = run(&["range", "--matrix", "0,0,1,0,0,0,0,0"]);
    let doc = json_of(&disk);
    assert_eq!(doc["kind"], "disk");
    assert_eq!(doc["semi_major"].as_f64().unwrap(), 0.5);
}

#[test]
fn range_csv_has_header_and_single_row() {
    let out = run(&["range", "--matrix", WIDE, "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(
        lines[0],
        "kind,center_re,center_im,focus1_re,focus1_im,focus2_re,focus2_im,semi_major,semi_minor,orientation"
    );
    assert!(lines[1].starts_with("ellipse,"));
}

#[test]
fn range_accepts_negative_leading_entry() {
    let out = run(&["range", "--matrix", "-1,0,0,0,0,0,1,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["kind"], "segment");
}

// ── input channels ──────────────────────────────────────────────────────────

#[test]
fn matrix_can_come_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("matrix.txt");
    std::fs::write(&path, WIDE).unwrap();
    let out = run(&["range", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["kind"], "ellipse");
}

#[test]
fn matrix_can_come_from_a_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("matrix.json");
    std::fs::write(
        &path,
        r#"[[{"re":0,"im":0},{"re":1,"im":0}],[{"re":0,"im":0},{"re":0,"im":0}]]"#,
    )
    .unwrap();
    let out = run(&["range", "--file", path.to_str().unwrap()]);
    assert_eq!(json_of(&out)["kind"], "disk");
}

#[test]
fn matrix_can_come_from_stdin() {
    let out = run_with_stdin(&["range", "--stdin"], WIDE);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["kind"], "ellipse");
}

#[test]
fn missing_source_is_an_input_error() {
    let out = run(&["range"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--matrix"), "{}", stderr_of(&out));
}

#[test]
fn conflicting_sources_are_an_input_error() {
    let out = run_with_stdin(&["range", "--matrix", WIDE, "--stdin"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_of(&out).contains("exactly one"),
        "{}",
        stderr_of(&out)
    );
}

#[test]
fn unreadable_file_is_an_input_error() {
    let out = run(&["range", "--file", "/nonexistent/matrix.txt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_of(&out).contains("/nonexistent/matrix.txt"),
        "{}",
        stderr_of(&out)
    );
}

// ── diagnostics ─────────────────────────────────────────────────────────────

#[test]
fn wrong_arity_reports_the_count() {
    let out = run(&["range", "--matrix", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("expected 8"), "{err}");
    assert!(err.contains("found 3"), "{err}");
}

#[test]
fn bad_token_is_named_with_its_position() {
    let out = run(&["range", "--matrix", "1,2,oops,4,5,6,7,8"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("entry 3"), "{err}");
    assert!(err.contains("oops"), "{err}");
}

#[test]
fn non_finite_entries_are_rejected() {
    let out = run(&["range", "--matrix", "inf,0,0,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_of(&out).contains("not finite"),
        "{}",
        stderr_of(&out)
    );
}

#[test]
fn malformed_json_matrix_is_rejected() {
    let out = run_with_stdin(&["range", "--stdin"], "[[{\"re\":");
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_of(&out).contains("invalid JSON"),
        "{}",
        stderr_of(&out)
    );
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["range", "--matrix", WIDE, "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_cleanly() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("numrange"));
}

// ── contains ────────────────────────────────────────────────────────────────

#[test]
fn contains_distinguishes_inside_and_outside() {
    let inside = run(&["contains", "--matrix", WIDE, "--point", "0,0"]);
    assert_eq!(inside.status.code(), Some(0));
    assert_eq!(stdout_of(&inside).trim(), "inside");

    let outside = run(&[
        "contains",
        "--matrix",
        "0,0,1,0,0,0,0,0",
        "--point",
        "0.51,0",
    ]);
    assert_eq!(outside.status.code(), Some(1));
    assert_eq!(stdout_of(&outside).trim(), "outside");
}

#[test]
fn contains_accepts_boundary_points_within_tolerance() {
    // The vertex (sqrt 5, 0) is exactly on the boundary.
    let out = run(&[
        "contains",
        "--matrix",
        WIDE,
        "--point",
        "2.2360679774997896,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn contains_honors_an_explicit_tolerance() {
    let barely_out = run(&[
        "contains",
        "--matrix",
        "0,0,1,0,0,0,0,0",
        "--point",
        "0.500001,0",
        "--tol",
        "1e-9",
    ]);
    assert_eq!(barely_out.status.code(), Some(1));
    let let_in = run(&[
        "contains",
        "--matrix",
        "0,0,1,0,0,0,0,0",
        "--point",
        "0.500001,0",
        "--tol",
        "1e-2",
    ]);
    assert_eq!(let_in.status.code(), Some(0));
}

#[test]
fn contains_rejects_bad_point_or_tolerance() {
    let bad_point = run(&["contains", "--matrix", WIDE, "--point", "1"]);
    assert_eq!(bad_point.status.code(), Some(2));
    assert!(
        stderr_of(&bad_point).contains("re,im"),
        "{}",
        stderr_of(&bad_point)
    );

    let bad_tol = run(&[
        "contains", "--matrix", WIDE, "--point", "0,0", "--tol", "-1",
    ]);
    assert_eq!(bad_tol.status.code(), Some(2));
    assert!(
        stderr_of(&bad_tol).contains("--tol"),
        "{}",
        stderr_of(&bad_tol)
    );
}

// ── boundary ────────────────────────────────────────────────────────────────

#[test]
fn boundary_emits_the_requested_grid() {
    let out = run(&["boundary", "--matrix", WIDE, "--points", "4"]);
    let doc = json_of(&out);
    assert_eq!(doc["n"], 4);
    let pts = doc["points"].as_array().unwrap();
    assert_eq!(pts.len(), 4);
    let a = 5.0f64.sqrt();
    let expect = [(a, 0.0), (0.0, 2.0), (-a, 0.0), (0.0, -2.0)];
    for (p, (re, im)) in pts.iter().zip(expect) {
        assert!((p["re"].as_f64().unwrap() - re).abs() <= 1e-12);
        assert!((p["im"].as_f64().unwrap() - im).abs() <= 1e-12);
    }
}

#[test]
fn boundary_of_a_point_shape_repeats_the_center() {
    let out = run(&[
        "boundary",
        "--matrix",
        "2,1,0,0,0,0,2,1",
        "--points",
        "3",
        "--format",
        "csv",
    ]);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,re,im");
    assert_eq!(lines.len(), 4);
    for line in &lines[1..] {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[1].parse::<f64>().unwrap(), 2.0);
        assert_eq!(cells[2].parse::<f64>().unwrap(), 1.0);
    }
}

#[test]
fn boundary_requires_a_positive_point_count() {
    let out = run(&["boundary", "--matrix", WIDE, "--points", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--points"), "{}", stderr_of(&out));
}

#[test]
fn boundary_default_point_count_is_256() {
    let out = run(&["boundary", "--matrix", WIDE]);
    assert_eq!(json_of(&out)["n"], 256);
}

// ── sample ──────────────────────────────────────────────────────────────────

#[test]
fn sample_output_is_byte_identical_per_seed() {
    let args = ["sample", "--matrix", WIDE, "--n", "50", "--seed", "123"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let other = run(&["sample", "--matrix", WIDE, "--n", "50", "--seed", "124"]);
    assert_ne!(first.stdout, other.stdout);
}

#[test]
fn sample_json_carries_seed_and_count() {
    let out = run(&["sample", "--matrix", WIDE, "--n", "5", "--seed", "9"]);
    let doc = json_of(&out);
    assert_eq!(doc["seed"], 9);
    assert_eq!(doc["n"], 5);
    assert_eq!(doc["points"].as_array().unwrap().len(), 5);
}

#[test]
fn sample_with_zero_draws_is_empty_but_valid() {
    let json = run(&["sample", "--matrix", WIDE, "--n", "0"]);
    let doc = json_of(&json);
    assert_eq!(doc["n"], 0);
    assert_eq!(doc["points"].as_array().unwrap().len(), 0);

    let csv = run(&["sample", "--matrix", WIDE, "--n", "0", "--format", "csv"]);
    let text = stdout_of(&csv);
    assert_eq!(text.lines().collect::<Vec<_>>(), vec!["# seed=0", "re,im"]);
}

#[test]
fn sampled_points_of_zero_matrix_sit_at_origin() {
    let out = run(&[
        "sample",
        "--matrix",
        "0,0,0,0,0,0,0,0",
        "--n",
        "4",
        "--format",
        "csv",
    ]);
    let text = stdout_of(&out);
    for line in text.lines().skip(2) {
        assert_eq!(line, "0.0000000000000000e0,0.0000000000000000e0");
    }
}

// ── verify ──────────────────────────────────────────────────────────────────

#[test]
fn verify_passes_and_reports_the_checks() {
    let out = run(&["verify", "--matrix", WIDE, "--n", "2000", "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["n_samples"], 2000);
    assert_eq!(doc["seed"], 11);
    assert_eq!(doc["pass"], true);
    let violation = doc["max_violation"].as_f64().unwrap();
    assert!(violation <= doc["inclusion_tol"].as_f64().unwrap());
    assert!(doc["axes_delta_major"].as_f64().unwrap() <= doc["consistency_tol"].as_f64().unwrap());
}

#[test]
fn verify_requires_at_least_one_sample() {
    let out = run(&["verify", "--matrix", WIDE, "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--n"), "{}", stderr_of(&out));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--matrix", WIDE, "--n", "1000", "--seed", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

// ── round trip ──────────────────────────────────────────────────────────────

#[test]
fn interior_grid_round_trips_through_contains() {
    let doc = json_of(&run(&["range", "--matrix", WIDE]));
    let center = (
        doc["center"]["re"].as_f64().unwrap(),
        doc["center"]["im"].as_f64().unwrap(),
    );
    let a = doc["semi_major"].as_f64().unwrap();
    let b = doc["semi_minor"].as_f64().unwrap();
    let or = doc["orientation"].as_f64().unwrap();
    let (cos, sin) = (or.cos(), or.sin());

    for i in 0..10 {
        for j in 0..10 {
            let t = 2.0 * std::f64::consts::PI * (i as f64) / 10.0;
            let r = 0.95 * (j as f64) / 9.0;
            let (u, v) = (r * a * t.cos(), r * b * t.sin());
            let re = center.0 + cos * u - sin * v;
            let im = center.1 + sin * u + cos * v;
            let point = format!("{re},{im}");
            let out = run(&["contains", "--matrix", WIDE, "--point", &point]);
            assert_eq!(
                out.status.code(),
                Some(0),
                "grid point {i},{j} = {point} fell outside"
            );
        }
    }
}
