//! End-to-end tests driving the compiled binary: exit codes, stdin/file
//! plumbing, text and JSON output, and byte-level determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn plo(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_plo"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.unwrap_or("").as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary exits")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("stdout is utf-8")
}

fn stderr_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).expect("stderr is utf-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn eval_reads_stdin_and_reports_per_map() {
    let out = plo(
        &["eval", "1/2"],
        Some("a: 0,0 1/2,1/4 3/4,1/2 1,1\nb: 0,0 1,1\n"),
    );
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "a: 1/4\nb: 1/2\n");
}

#[test]
fn eval_rejects_points_outside_the_interval() {
    let out = plo(&["eval", "3/2"], Some("0,0 1,1\n"));
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("outside [0,1]"));
}

#[test]
fn compose_folds_left_to_right() {
    // a map followed by its inverse composes to the identity
    let out = plo(
        &["compose"],
        Some("f: 0,0 1/2,1/4 1,1\ng: 0,0 1/4,1/2 1,1\n"),
    );
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "product: 0,0 1,1\n");
}

#[test]
fn orbitals_lists_directions() {
    let out = plo(&["orbitals"], Some("m: 0,0 1/2,1/4 1,1\nid: 0,0 1,1\n"));
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "m: (0, 1) left\nid: fixes every point\n"
    );
}

#[test]
fn parse_errors_carry_position_and_exit_1() {
    let out = plo(&["orbitals"], Some("0,0 1/2,1/4 oops\n"));
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("line 1, column 13"));
}

#[test]
fn chains_detects_and_reports_none() {
    let dir = tempfile::tempdir().expect("tempdir");
    let pair = dir.path().join("pair.txt");
    let built = plo(
        &["build", "crossing-pair", "--out", pair.to_str().unwrap()],
        None,
    );
    assert_eq!(exit_code(&built), 0);

    let hit = plo(&["chains", "--in", pair.to_str().unwrap()], None);
    assert_eq!(exit_code(&hit), 0);
    assert_eq!(
        stdout_of(&hit),
        "transition chain: (0, 3/4) crosses (1/4, 1) on (1/4, 3/4)\n"
    );

    let miss = plo(&["chains"], Some("0,0 1/2,1/4 1,1\n"));
    assert_eq!(exit_code(&miss), 0);
    assert_eq!(stdout_of(&miss), "no transition chain\n");
}

#[test]
fn chains_searches_the_ball_and_honors_the_cap() {
    let dir = tempfile::tempdir().expect("tempdir");
    let pair = dir.path().join("pair.txt");
    plo(&["build", "crossing-pair", "--out", pair.to_str().unwrap()], None);

    let found = plo(
        &["chains", "--radius", "1", "--in", pair.to_str().unwrap()],
        None,
    );
    assert_eq!(exit_code(&found), 0);
    assert!(stdout_of(&found).starts_with("transition chain from words g1 and g2"));

    let capped = plo(
        &["chains", "--radius", "2", "--cap", "3", "--in", pair.to_str().unwrap()],
        None,
    );
    assert_eq!(exit_code(&capped), 3);
    assert!(stderr_of(&capped).contains("resource limit"));
}

#[test]
fn nested_tower_pipeline_reports_witnesses() {
    let dir = tempfile::tempdir().expect("tempdir");
    let gens = dir.path().join("gens.txt");
    plo(&["build", "nested", "3", "--out", gens.to_str().unwrap()], None);

    let fundamental = plo(&["fundamental", "--in", gens.to_str().unwrap()], None);
    assert_eq!(exit_code(&fundamental), 0);
    assert!(stdout_of(&fundamental).starts_with("fundamental:"));

    let towers = plo(&["towers", "--in", gens.to_str().unwrap()], None);
    assert_eq!(
        stdout_of(&towers),
        "tower[(5/16, 3/8) < (1/4, 1/2) < (0, 1)]\n"
    );

    let witness = plo(&["witness", "--in", gens.to_str().unwrap()], None);
    assert_eq!(exit_code(&witness), 0);
    assert_eq!(
        stdout_of(&witness),
        "(5/16, 3/8) inside (5/16, 3/8)\n(1/4, 19/64) inside (1/4, 1/2)\n(0, 3/16) inside (0, 1)\n"
    );
}

#[test]
fn witness_refuses_crossing_input() {
    let dir = tempfile::tempdir().expect("tempdir");
    let pair = dir.path().join("pair.txt");
    plo(&["build", "crossing-pair", "--out", pair.to_str().unwrap()], None);
    let out = plo(&["witness", "--in", pair.to_str().unwrap()], None);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("ascending chain"));
}

#[test]
fn bounce_and_corners_analyze_a_pair() {
    let dir = tempfile::tempdir().expect("tempdir");
    let pair = dir.path().join("pair.txt");
    plo(&["build", "crossing-pair", "--out", pair.to_str().unwrap()], None);

    let corners = plo(&["corners", "--in", pair.to_str().unwrap()], None);
    assert_eq!(exit_code(&corners), 0);
    assert_eq!(stdout_of(&corners), "7/12\n");

    let bounce = plo(&["bounce", "--in", pair.to_str().unwrap()], None);
    assert_eq!(exit_code(&bounce), 0);
    assert_eq!(stdout_of(&bounce), "none\n");

    let wrong_arity = plo(&["bounce"], Some("0,0 1,1\n"));
    assert_eq!(exit_code(&wrong_arity), 1);
    assert!(stderr_of(&wrong_arity).contains("exactly two maps"));
}

#[test]
fn phi_reports_distinct_codes() {
    let family = "\
a: 0,0 1/2,1/4 3/4,1/2 1,1
b: 0,0 1/2,1/4 1,1
c: 0,0 1/2,1/8 1,1
";
    let out = plo(&["phi"], Some(family));
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("a: slope 1/2"));
    assert!(text.ends_with("3 bumps on (0, 1): 3 distinct codes, 0 collisions\n"));
}

#[test]
fn build_covers_every_construction() {
    let model = plo(&["build", "model"], None);
    assert_eq!(stdout_of(&model), "model: 0,0 1/2,1/4 3/4,1/2 1,1\n");

    let bump = plo(&["build", "one-bump", "1/4", "1/2"], None);
    assert_eq!(exit_code(&bump), 0);
    assert!(stdout_of(&bump).starts_with("bump: 0,0 1/4,1/4"));

    let wreath = plo(&["build", "wreath", "5/16", "3/8", "1/4", "1/2"], None);
    assert_eq!(exit_code(&wreath), 0);
    let text = stdout_of(&wreath);
    assert!(text.starts_with("h: ") && text.contains("\nf: "));

    let unknown = plo(&["build", "pretzel"], None);
    assert_eq!(exit_code(&unknown), 1);
    assert!(stderr_of(&unknown).contains("unknown construction"));

    let arity = plo(&["build", "one-bump", "1/4"], None);
    assert_eq!(exit_code(&arity), 1);
    assert!(stderr_of(&arity).contains("takes 2 arguments"));
}

#[test]
fn json_documents_round_trip_through_commands() {
    let built = plo(&["build", "nested", "2", "--format", "json"], None);
    assert_eq!(exit_code(&built), 0);
    let json = stdout_of(&built);
    assert!(json.contains("\"name\": \"g1\""));

    // feed the JSON back in through a different command
    let orbitals = plo(&["orbitals"], Some(json));
    assert_eq!(exit_code(&orbitals), 0);
    assert_eq!(
        stdout_of(&orbitals),
        "g1: (0, 1) left\ng2: (1/4, 1/2) left\n"
    );
}

#[test]
fn svg_output_is_byte_identical_across_runs() {
    let input = "m: 0,0 1/2,1/4 1,1\n";
    let first = plo(&["svg", "--scale", "200", "--margin", "20"], Some(input));
    let second = plo(&["svg", "--scale", "200", "--margin", "20"], Some(input));
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout_of(&first).contains("<polyline"));
}

#[test]
fn verify_is_reproducible_and_rejects_unknown_suites() {
    let args = ["verify", "io", "wreath", "--seed", "11", "--size", "6", "--format", "json"];
    let first = plo(&args, None);
    let second = plo(&args, None);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let unknown = plo(&["verify", "nonsense"], None);
    assert_eq!(exit_code(&unknown), 1);
    assert!(stderr_of(&unknown).contains("unknown verification suite"));
}

#[test]
fn timing_goes_to_stderr_not_stdout() {
    let out = plo(&["build", "model"], None);
    assert!(stderr_of(&out).contains("completed in"));
    assert!(!stdout_of(&out).contains("completed in"));
}

#[test]
fn usage_errors_exit_1() {
    let out = plo(&["frobnicate"], None);
    assert_eq!(exit_code(&out), 1);

    let help = plo(&["--help"], None);
    assert_eq!(exit_code(&help), 0);
    assert!(stdout_of(&help).contains("Usage:"));
}
