use std::process::{Command, Output};

use homlab::graph6;
use homlab::target_json::from_json;
use homlab_core::are_isomorphic;
use homlab_core::constructions::{complete_bipartite, h_wr};
use homlab_core::TargetGraph;
use serde_json::Value;

fn homlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homlab")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_lines(text: &str) -> Vec<Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn census_export_has_header_and_graph6_lines() {
    let text = stdout(&homlab(&["census", "--n", "6", "--d", "3", "--connected"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "#census n=6 d=3 filters=connected");
    assert_eq!(lines.len(), 3);
    for l in &lines[1..] {
        assert!(graph6::decode(l).unwrap().is_d_regular(3));
    }
    let counts = stdout(&homlab(&["census", "--n-max", "10", "--d", "3", "--connected", "--count"]));
    assert!(counts.contains("n=10 d=3 filters=connected count=19"));
    let parity = homlab(&["census", "--n", "5", "--d", "3"]);
    assert_eq!(parity.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parity.stderr).contains("odd"));
}

#[test]
fn count_engines_agree() {
    for engine in ["auto", "dp", "backtrack", "brute"] {
        assert_eq!(stdout(&homlab(&["count", "--graph", "C~", "--target", "wr", "--engine", engine])).trim(), "31");
        assert_eq!(stdout(&homlab(&["count", "--graph", "Cr", "--target", "ind", "--engine", engine])).trim(), "7");
        assert_eq!(stdout(&homlab(&["count", "--graph", "Cr", "--target", "path:4", "--zb", "--engine", engine])).trim(), "7");
    }
    let weighted = stdout(&homlab(&["count", "--graph", "A_", "--target", "wr:lb=1/2,lw=1,lr=1"]));
    // ordered adjacent pairs: loops 1 + 1 + 1/4, edges 2 * (1 + 1/2)
    assert_eq!(weighted.trim(), "21/4");
}

#[test]
fn transforms() {
    let cover = stdout(&homlab(&["transform", "--op", "double-cover", "--graph", "C~"]));
    let g = graph6::decode(cover.trim()).unwrap();
    assert!(are_isomorphic(&TargetGraph::from(&g), &TargetGraph::from(&complete_bipartite(4, 4))));

    let line = stdout(&homlab(&["transform", "--op", "ext-line", "--target", "path:4"]));
    assert!(are_isomorphic(&from_json(line.trim()).unwrap(), &h_wr()));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.json");
    std::fs::write(&path, r#"{"n":4,"loops":[],"edges":[[0,1],[1,2],[2,3]],"weights":["1","2","3/4","5"]}"#).unwrap();
    let weighted = stdout(&homlab(&["transform", "--op", "ext-line", "--target-json", path.to_str().unwrap()]));
    let h = from_json(weighted.trim()).unwrap();
    assert_eq!(h.looped_vertices(), vec![0, 1, 2]);

    let exp = stdout(&homlab(&["transform", "--op", "exponential", "--target", "ind", "--exponent", "A_"]));
    assert_eq!(from_json(exp.trim()).unwrap().n(), 4);
    let bad = homlab(&["transform", "--op", "ext-line", "--target", "wr"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn check_reports_parse_and_formats_switch() {
    let text = stdout(&homlab(&["check-wr", "--d", "3", "--n-max", "8", "--audit"]));
    let lines = json_lines(&text);
    let summary = lines.last().unwrap();
    assert_eq!(summary["type"], "summary");
    assert_eq!(summary["verified"], true);
    assert_eq!(summary["records"], 9);
    assert_eq!(lines.len(), 10);
    assert!(lines[..9].iter().all(|l| l["ok"] == true));

    let csv = stdout(&homlab(&["check-kahn", "--target", "path:3", "--d", "2", "--n-max", "8", "--format", "csv"]));
    let rows: Vec<&str> = csv.lines().collect();
    assert!(rows[0].starts_with("check,target,graph6"));
    assert_eq!(rows.len(), 1 + 4 + 1);

    let ext = stdout(&homlab(&["check-ext", "--target", "path:5", "--d", "3", "--n-max", "8", "--random-weightings", "2"]));
    assert_eq!(json_lines(&ext).iter().filter(|l| l["type"] == "summary").count(), 3);

    let fixed = stdout(&homlab(&["check-ext", "--target", "path:4", "--weights", "1,2,3/4,5", "--d", "3", "--n-max", "6"]));
    assert!(fixed.contains("path:4 weights=[1,2,3/4,5]"));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let run = homlab(&[
        "check-conj",
        "--which",
        "triangle-free",
        "--target",
        "wr",
        "--target",
        "ind",
        "--d",
        "3",
        "--n-max",
        "10",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(run.status.success());
    let text = std::fs::read_to_string(out).unwrap();
    let summaries: Vec<Value> = json_lines(&text).into_iter().filter(|l| l["type"] == "summary").collect();
    assert_eq!(summaries.len(), 2);
    assert!(summaries.iter().all(|s| s["status"] == "consistent at tested scale"));
}

#[test]
fn crossover_command() {
    let text = stdout(&homlab(&["crossover", "--k", "6", "--d-max", "10"]));
    let lines = json_lines(&text);
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[0]["outcome"], "EQUAL");
    assert_eq!(lines[2]["outcome"], "LESS");
    assert!(lines[10]["status"].as_str().unwrap().contains("d = 3"));
}

#[test]
fn run_all_with_census_disabled() {
    let cfg = homlab::config::DEFAULT_CONFIG.replacen("[census]\nenabled = true", "[census]\nenabled = false", 1);
    assert_ne!(cfg, homlab::config::DEFAULT_CONFIG);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.toml");
    std::fs::write(&path, cfg.replacen("[crossover]\nenabled = true", "[crossover]\nenabled = false", 1)).unwrap();
    let text = stdout(&homlab(&["run-all", "--config", path.to_str().unwrap()]));
    let lines = json_lines(&text);
    assert!(lines.iter().all(|l| l["check"] == "identities"));
    assert!(lines.iter().all(|l| l["label"] != "double-cover"));
    assert_eq!(lines.iter().filter(|l| l["type"] == "summary").count(), 1);
    assert_eq!(lines.last().unwrap()["verified"], true);
}

#[test]
fn malformed_config_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "seed = 1\n").unwrap();
    let out = homlab(&["run-all", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed config"));
}
