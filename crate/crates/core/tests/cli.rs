//! End-to-end runs of the command-line interface on emitted fixtures.

use std::path::{Path, PathBuf};

use serde_json::Value;
use tempfile::TempDir;

use visual_raag::caps::Caps;
use visual_raag::cli::{run_with, EXIT_INPUT, EXIT_NO, EXIT_UNKNOWN, EXIT_YES};
use visual_raag::conditions::{check_all, revalidate, Condition};
use visual_raag::decision::{decide_raag_system, Answer};
use visual_raag::families::{emit_family, make_family, FamilySpec};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("visual-raag").chain(args.iter().copied());
    let code = run_with(argv, None, &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn json(r: &Run) -> Value {
    serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", r.stdout))
}

fn write_fixture(dir: &Path, spec: &FamilySpec) -> PathBuf {
    let path = dir.join(format!("{spec}.theta"));
    std::fs::write(&path, emit_family(spec).unwrap()).unwrap();
    path
}

fn exit_for(answer: Answer) -> i32 {
    match answer {
        Answer::Yes => EXIT_YES,
        Answer::No => EXIT_NO,
        Answer::Unknown => EXIT_UNKNOWN,
    }
}

#[test]
fn decide_exit_codes_follow_the_verdict() {
    let dir = TempDir::new().unwrap();
    for spec in FamilySpec::fixture_suite() {
        let path = write_fixture(dir.path(), &spec);
        let r = run(&["decide", "--input", path.to_str().unwrap()]);
        let expected = decide_raag_system(&make_family(&spec).unwrap(), &Caps::default()).answer;
        assert_eq!(r.code, exit_for(expected), "{spec}: {}", r.stderr);
        let v = json(&r);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["command"], "decide");
    }
}

#[test]
fn known_verdicts() {
    let dir = TempDir::new().unwrap();
    let path = |spec| write_fixture(dir.path(), &spec).to_str().unwrap().to_owned();

    let r = run(&["decide", "--input", &path(FamilySpec::GammaN { n: 3 })]);
    assert_eq!(r.code, EXIT_YES);

    let r = run(&["decide", "--input", &path(FamilySpec::Hexagon)]);
    assert_eq!(r.code, EXIT_NO);
    let v = json(&r);
    assert_eq!(v["certificate"]["failed_condition"]["name"], "R4");
    assert_eq!(v["certificate"]["kernel_witness"]["length"], 8);

    let r = run(&["index", "--input", &path(FamilySpec::C4Diagonals)]);
    assert_eq!(r.code, EXIT_YES);
    assert_eq!(json(&r)["index_report"]["omega_index"], 4);

    let r = run(&["decide", "--input", &path(FamilySpec::IsolatedMatching)]);
    assert_eq!(r.code, EXIT_UNKNOWN);
}

#[test]
fn failure_witnesses_in_output_revalidate() {
    let dir = TempDir::new().unwrap();
    let caps = Caps::default();
    let mut failures = 0;
    for spec in FamilySpec::fixture_suite() {
        let path = write_fixture(dir.path(), &spec);
        let r = run(&["check", "--input", path.to_str().unwrap()]);
        let theta = make_family(&spec).unwrap();
        let reports = check_all(&theta, &Condition::ALL, &caps);
        let printed = json(&r)["conditions"].clone();
        assert_eq!(printed, serde_json::to_value(&reports).unwrap(), "{spec}");
        for report in reports.iter().filter(|r| !r.passed) {
            assert!(revalidate(&theta, report).unwrap(), "{spec}: {report:?}");
            failures += 1;
        }
        if reports.iter().any(|r| !r.passed) {
            assert_eq!(r.code, EXIT_NO, "{spec}");
        }
    }
    assert!(failures > 0);
}

#[test]
fn output_is_deterministic_and_honours_output_flag() {
    let dir = TempDir::new().unwrap();
    let input = write_fixture(dir.path(), &FamilySpec::Hexagon);
    let input = input.to_str().unwrap();
    let first = run(&["decide", "--input", input]);
    let second = run(&["decide", "--input", input]);
    assert_eq!(first.stdout, second.stdout);

    let target = dir.path().join("verdict.json");
    let r = run(&["--output", target.to_str().unwrap(), "decide", "--input", input]);
    assert_eq!(r.code, EXIT_NO);
    assert_eq!(std::fs::read_to_string(&target).unwrap(), first.stdout);
}

#[test]
fn text_format_and_other_commands() {
    let dir = TempDir::new().unwrap();
    let input = write_fixture(dir.path(), &FamilySpec::C4Diagonals);
    let input = input.to_str().unwrap();
    let r = run(&["--format", "text", "decide", "--input", input]);
    assert!(!r.stdout.is_empty() && !r.stdout.trim_start().starts_with('{'));

    let r = run(&["--format", "text", "omega-export", "--input", input]);
    assert_eq!(r.code, EXIT_YES, "{}", r.stderr);
    assert!(r.stdout.starts_with("vertices 4\nedges 8\n"), "{}", r.stdout);

    for cmd in ["commuting-graph", "kernel-search"] {
        let r = run(&[cmd, "--input", input, "--depth", "4"]);
        assert!(r.code == EXIT_YES || r.code == EXIT_NO, "{cmd}: {}", r.stderr);
        assert_eq!(json(&r)["command"], cmd);
    }

    let r = run(&["families", "emit", "gamma_n", "4"]);
    assert_eq!(r.code, EXIT_YES);
    assert_eq!(r.stdout, emit_family(&FamilySpec::GammaN { n: 4 }).unwrap());
}

#[test]
fn bad_input_exits_with_input_error() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.theta");
    std::fs::write(&bad, "vertices: a b\ngamma: a-c\n").unwrap();
    let r = run(&["decide", "--input", bad.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(!r.stderr.is_empty());

    let missing = dir.path().join("absent.theta");
    assert_eq!(run(&["decide", "--input", missing.to_str().unwrap()]).code, EXIT_INPUT);
    assert_eq!(run(&["families", "emit", "gamma_n"]).code, EXIT_INPUT);
}
