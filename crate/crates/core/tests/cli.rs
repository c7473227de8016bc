use std::process::Command;

use polydual::cli::{run, Cli, EXIT_CAP, EXIT_INVALID, EXIT_OK};
use polydual::Sggi;

use clap::Parser;

fn polydual(args: &[&str]) -> (i32, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("polydual").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(cli, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let (code, out, _) = polydual(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{out}: {e}")))
}

#[test]
fn tetrahedron_dual_flag_golden() {
    let (code, out, _) = polydual(&["dual-flag", "--family", "tetrahedron"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, include_str!("golden/simplex_dual_flag.txt"));
}

#[test]
fn torus_dual_flag_golden() {
    let (code, out, _) = polydual(&["dual-flag", "--torus44", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, include_str!("golden/torus44_5_dual_flag.txt"));
    let (_, out, _) = polydual(&["dual-flag", "--torus44", "4"]);
    assert_eq!(out, "none\n");
}

#[test]
fn all_p_witness() {
    let (code, v) = json(&["classify", "--family", "all-p", "--p", "9"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["class"], "internal");
    assert_eq!(v["witness"], "(2,5)(3,4)");
    assert_eq!(v["valid"], true);
    assert_eq!(v["schlafli"], serde_json::json!([9, 9]));
}

#[test]
fn classify_examples() {
    assert_eq!(json(&["classify", "--torus44", "4"]).1["class"], "external");
    assert_eq!(json(&["classify", "--coxeter", "3,4,3"]).1["class"], "external");
    assert_eq!(json(&["classify", "--coxeter", "3,4,3"]).1["order"], 1152);
    assert_eq!(json(&["classify", "--family", "polygon", "--p", "4"]).1["class"], "external");
}

#[test]
fn reports_are_deterministic_and_timings_are_opt_in() {
    let args = ["classify", "--family", "rank-n", "--n", "5"];
    let (_, a, _) = polydual(&args);
    let (_, b, _) = polydual(&args);
    assert_eq!(a, b);
    assert!(!a.contains("timings_ms"));
    let (_, v) = json(&["classify", "--family", "rank-n", "--n", "5", "--timings"]);
    assert!(v["timings_ms"].is_object());
}

#[test]
fn exit_codes() {
    assert_eq!(polydual(&["classify", "--family", "nope"]).0, EXIT_INVALID);
    assert_eq!(polydual(&["classify", "--family", "polygon"]).0, EXIT_INVALID);
    assert_eq!(polydual(&["check", "--family", "rank-n", "--n", "6"]).0, EXIT_INVALID);
    assert_eq!(polydual(&["check", "--family", "rank-n", "--n", "7"]).0, EXIT_OK);
    assert_eq!(polydual(&["classify", "--coxeter", "inf,inf", "--cap", "5000"]).0, EXIT_CAP);
    assert_eq!(polydual(&["classify", "--coxeter", "3,3", "--family", "edge"]).0, EXIT_INVALID);
}

#[test]
fn emit_formats() {
    let (code, dot, _) = polydual(&["emit", "--family", "all-p", "--p", "9", "--format", "dot"]);
    assert_eq!(code, EXIT_OK);
    let nodes = dot.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("--")).count();
    assert_eq!(nodes, 9);

    let (_, text, _) = polydual(&["emit", "--family", "rank-n", "--n", "5"]);
    assert_eq!(text.lines().next().unwrap(), "cpr rank=5 vertices=10");

    let (_, sggi, _) = polydual(&["emit", "--torus44", "3", "--format", "sggi"]);
    assert_eq!(Sggi::parse(&sggi).unwrap().order(), 72);
}

#[test]
fn emitted_files_read_back() {
    let dir = tempfile::tempdir().unwrap();
    for (format, args) in [
        ("text", vec!["--family", "all-p", "--p", "8"]),
        ("sggi", vec!["--torus44", "3"]),
        ("sggi", vec!["--coxeter", "3,3"]),
    ] {
        let path = dir.path().join(format!("{format}.txt"));
        let path_s = path.to_str().unwrap();
        let mut emit = vec!["emit", "--format", format, "-o", path_s];
        emit.extend(&args);
        assert_eq!(polydual(&emit).0, EXIT_OK);
        let mut direct = vec!["classify"];
        direct.extend(&args);
        let (_, want) = json(&direct);
        let (code, got) = json(&["classify", "--input", path_s]);
        assert_eq!(code, EXIT_OK, "{format} {args:?}");
        assert_eq!(got["class"], want["class"]);
        assert_eq!(got["order"], want["order"]);
    }
}

#[test]
fn presentation_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    std::fs::write(&path, "gens 3\n0 0\n1 1\n2 2\n0 1 0 1 0 1\n1 2 1 2 1 2\n0 2 0 2\n").unwrap();
    let (code, v) = json(&["classify", "--input", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["order"], 24);
    assert_eq!(v["class"], "internal");
}

#[test]
fn survey_counts() {
    for (corpus, last) in [
        ("polygons", "self-dual 10  internal 5  external 5  none 0  errors 0"),
        ("torus44", "self-dual 8  internal 4  external 4  none 0  errors 0"),
        ("all-p", "self-dual 6  internal 6  external 0  none 0  errors 0"),
    ] {
        let (code, out, _) = polydual(&["survey", "--corpus", corpus, "--jobs", "3"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().last().unwrap(), last);
        let (_, serial, _) = polydual(&["survey", "--corpus", corpus]);
        assert_eq!(serial, out);
    }
    let (_, v) = json(&["survey", "--corpus", "polygons", "--format", "json"]);
    assert_eq!(v["counts"]["internal"], 5);
}

#[test]
fn binary_entry_point() {
    let out = Command::new(env!("CARGO_BIN_EXE_polydual"))
        .args(["classify", "--family", "polygon", "--p", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["class"], "internal");
    let out = Command::new(env!("CARGO_BIN_EXE_polydual"))
        .args(["classify", "--coxeter", "inf,3"])
        .env("POLYDUAL_CAP", "2000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
