use std::process::{Command, Output};

use chessboard_core::ring::parse_ideal;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chessboard"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn generator_count(args: &[&str]) -> usize {
    parse_ideal(&stdout(args)).unwrap().gens().len()
}

#[test]
fn ideal_examples() {
    assert_eq!(generator_count(&["ideal", "--m", "3", "--n", "3"]), 6);
    assert_eq!(generator_count(&["ideal", "--m", "2", "--n", "2", "--power", "2"]), 3);
    let sr = parse_ideal(&stdout(&["ideal", "--m", "1", "--n", "4", "--kind", "stanley-reisner"])).unwrap();
    assert_eq!(sr.gens().len(), 6);
    assert!(sr.gens().iter().all(|g| g.degree() == 2));
}

#[test]
fn emitted_ideals_round_trip() {
    for args in [
        vec!["ideal", "--m", "2", "--n", "4", "--power", "3"],
        vec!["ideal", "--m", "3", "--n", "5", "--kind", "stanley-reisner"],
        vec!["ideal", "--fixture", "L_2n5", "--n", "5"],
    ] {
        let text = stdout(&args);
        let parsed = parse_ideal(&text).unwrap();
        assert_eq!(chessboard_core::ring::write_ideal(&parsed), text, "{args:?}");
    }
}

#[test]
fn primes_methods_agree() {
    let out = stdout(&["primes", "--m", "2", "--n", "3", "--method", "both"]);
    assert_eq!(out.lines().last(), Some("count 5"));
    let out = stdout(&["primes", "--m", "1", "--n", "5"]);
    assert_eq!(out.lines().next(), Some("x11 x12 x13 x14 x15"));
    assert_eq!(out.lines().last(), Some("count 1"));
}

fn report(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn invariants_examples() {
    let r = report(&["invariants", "--m", "3", "--n", "3"]);
    let inv = &r["report"];
    assert_eq!(r["board"], serde_json::json!([3, 3]));
    for (key, value) in [("reg", 4), ("depth", 4), ("dim", 6), ("height", 3), ("bight", 4), ("a_invariant", 0)] {
        assert_eq!(inv[key], value, "{key}");
    }
    let r = report(&["invariants", "--m", "2", "--n", "3", "--power", "4"]);
    assert_eq!(r["report"]["depth"], 1);
    let r = report(&["invariants", "--m", "2", "--n", "4", "--power", "2", "--char", "2"]);
    assert_eq!(r["report"]["depth"], 2);
    assert_eq!(r["report"]["reg"], 4);
}

#[test]
fn json_reports_are_deterministic() {
    let strip = |mut v: serde_json::Value| {
        v["report"].as_object_mut().unwrap().remove("wall_time_ms");
        v
    };
    let args = ["invariants", "--m", "2", "--n", "3", "--power", "2"];
    assert_eq!(strip(report(&args)), strip(report(&args)));
    let m = ["matching", "--m", "3", "--n", "4"];
    assert_eq!(stdout(&m), stdout(&m));
}

#[test]
fn betti_from_file_and_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l6.txt");
    std::fs::write(&path, stdout(&["ideal", "--fixture", "L_six"])).unwrap();
    let text = stdout(&["betti", path.to_str().unwrap()]);
    assert!(text.contains("reg 3"), "{text}");
    assert!(text.contains("hochster cross-check: agrees"));

    let j: serde_json::Value =
        serde_json::from_str(&stdout(&["betti", "--fixture", "L_2n3", "--n", "4", "--format", "json"])).unwrap();
    assert_eq!(j["table"]["reg"], 5);
    let j: serde_json::Value =
        serde_json::from_str(&stdout(&["betti", "--fixture", "L_2n5", "--n", "4", "--format", "json"])).unwrap();
    assert_eq!(j["table"]["reg"], 3);
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "vars 2\n1 0\n1 x\n").unwrap();
    let out = run(&["betti", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains('3'));
}

#[test]
fn matching_reaches_the_lower_bound() {
    let j = report(&["matching", "--m", "3", "--n", "3"]);
    assert_eq!(j["value"], 4);
    assert_eq!(j["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["ideal", "--m", "4", "--n", "3"]).status.code(), Some(1));
    assert_eq!(run(&["ideal", "--m", "2", "--n", "7"]).status.code(), Some(1));
    assert_eq!(run(&["ideal", "--m", "2", "--n", "2", "--power", "5"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["invariants", "--m", "4", "--n", "4"]).status.code(), Some(3));
    assert_eq!(run(&["invariants", "--m", "2", "--n", "4", "--power", "3"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "--suite", "properties"]).status.code(), Some(0));
}

#[test]
fn long_suite_skips_without_the_flag() {
    let out = stdout(&["verify", "--suite", "long"]);
    assert!(out.contains("SKIPPED-LONG four-by-four"), "{out}");
    assert!(out.contains("PASS         two-row-3-t4"), "{out}");
}
