use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn tessera(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tessera")).current_dir(dir).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn generate(dir: &Path, name: &str, p: &str, q: &str, h: &str) {
    let out = tessera(dir, &["generate", "--p", p, "--q", q, "--height", h, "-o", name]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn generate_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "a.json", "7", "3", "4");
    generate(dir.path(), "b.json", "7", "3", "4");
    let a = std::fs::read(dir.path().join("a.json")).unwrap();
    assert_eq!(a, std::fs::read(dir.path().join("b.json")).unwrap());
    assert!(String::from_utf8_lossy(&a).contains("tessera-graph-v1"));
    let out = tessera(dir.path(), &["export", "json", "--graph", "a.json"]);
    assert_eq!(out.stdout, a);
}

#[test]
fn gauss_bonnet_passes() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "g.json", "7", "3", "4");
    let out = tessera(dir.path(), &["verify", "gauss-bonnet", "--graph", "g.json", "--samples", "500", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["pass"], true);
    assert_eq!(r["report"]["sampled"]["checked"], 500);
    assert_eq!(r["config"]["seed"], 1);
}

#[test]
fn weil_table_for_squares() {
    let dir = tempfile::tempdir().unwrap();
    let out = tessera(dir.path(), &["verify", "weil", "--q", "4", "--n-max", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let table = r["report"]["table"].as_array().unwrap();
    assert_eq!(table.len(), 40);
    for row in table {
        let n = row["n"].as_u64().unwrap();
        let expect = if n == 1 || n % 2 == 0 { "witness" } else { "impossible" };
        assert_eq!(row["outcome"], expect, "n = {n}");
    }
}

#[test]
fn wrong_parameters_give_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "g.json", "7", "3", "4");
    // B₂ of the (7,3) tiling does not satisfy the inequality claimed for degree 8.
    let out = tessera(dir.path(), &["verify", "lemma", "--graph", "g.json", "--ball", "2", "--p", "8", "--q", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["witness_file"], "witness.json");
    let w: Value = serde_json::from_slice(&std::fs::read(dir.path().join("witness.json")).unwrap()).unwrap();
    assert_eq!(w["vertices"].as_array().unwrap().len(), 29);
}

#[test]
fn flat_puffed_windows_fail() {
    let dir = tempfile::tempdir().unwrap();
    let out = tessera(dir.path(), &["extremal", "puffed-ball", "--p", "6", "--n", "7", "--deltas", "2000"]);
    assert_eq!(out.status.code(), Some(1));
    let w: Value = serde_json::from_slice(&std::fs::read(dir.path().join("witness.json")).unwrap()).unwrap();
    assert!(w["first_delta"].as_u64().unwrap() >= 2);
}

#[test]
fn bad_input_is_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = tessera(dir.path(), &["analyze", "--graph", "missing.json", "--ball", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let record: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(record["error"], "Io");

    std::fs::write(dir.path().join("bad.json"), "{\"format\": \"nope\"}").unwrap();
    let out = tessera(dir.path(), &["export", "dot", "--graph", "bad.json"]);
    assert_eq!(out.status.code(), Some(2));

    let out = tessera(dir.path(), &["verify", "weil", "--q", "5", "--n-max", "3"]);
    let record: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!((out.status.code(), record["error"].as_str()), (Some(2), Some("UnsupportedQ")));

    let out = tessera(dir.path(), &["generate", "--p", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analysis_and_extremal_reports() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "g.json", "7", "3", "4");
    let r = json(&tessera(dir.path(), &["analyze", "--graph", "g.json", "--ball", "1"]));
    assert_eq!(r["report"]["boundary"]["length"], 7);
    assert_eq!(r["report"]["kappa"], "-4/3");
    let r = json(&tessera(dir.path(), &["extremal", "quasi-ball", "--p", "4", "--q", "4", "--n", "1", "--core", "edge"]));
    assert_eq!(r["report"]["vertices"], 12);
    let r = json(&tessera(dir.path(), &["extremal", "weil", "--q", "6", "--n", "16"]));
    assert_eq!(r["report"]["outcome"], "impossible");
    let r = json(&tessera(dir.path(), &["extremal", "transfer", "--p", "7", "--seed", "4", "--mode", "t3"]));
    assert_eq!(r["pass"], true);
    let r = json(&tessera(dir.path(), &["search", "min-ratio", "--graph", "g.json", "--max-vertices", "3"]));
    // A triangle: 15 outgoing edges over 3 vertices.
    assert_eq!(r["report"]["minimum"], serde_json::json!({"num": "5", "den": "1"}));
}

#[test]
fn exports() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "g.json", "4", "4", "3");
    let dot = tessera(dir.path(), &["export", "dot", "--graph", "g.json"]);
    assert!(String::from_utf8_lossy(&dot.stdout).starts_with("graph tessera {"));
    let svg = tessera(dir.path(), &["export", "svg", "--graph", "g.json", "--ball", "1"]);
    let text = String::from_utf8_lossy(&svg.stdout);
    assert!(text.starts_with("<svg") && text.contains("fill=\"#f3c98b\""));
}

#[test]
fn thread_count_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "g.json", "6", "3", "6");
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_tessera"))
            .current_dir(dir.path())
            .env("TESSERA_THREADS", threads)
            .args(["verify", "bounds", "--graph", "g.json", "--p1", "6", "--q1", "3", "--budget", "5"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("3"));
}
