mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use common::*;
use mostar::format::write_graph;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn mostar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mostar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn total(text: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix("total: "))
        .expect("report has a total")
        .to_string()
}

#[test]
fn coronene_command() {
    let out = mostar(&["coronene", "--h", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(total(&text), "1620");
    assert!(text.contains("closed form: 1620\n"));
    assert!(text.contains("closed-form match"));
}

#[test]
fn direct_on_hexagon() {
    let hex = data("hexagon.graph");
    let out = mostar(&["mostar", hex.to_str().unwrap(), "--method", "direct"]);
    assert!(out.status.success());
    assert_eq!(total(&stdout(&out)), "0");
}

#[test]
fn direct_and_cut_agree_on_random_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = StdRng::seed_from_u64(3);
    for i in 0..10 {
        let g = random_connected_graph(&mut rng, 12);
        let path = dir.path().join(format!("g{i}.graph"));
        std::fs::write(&path, write_graph(&g)).unwrap();
        let p = path.to_str().unwrap();
        let direct = mostar(&["mostar", p, "--method", "direct"]);
        let cut = mostar(&["mostar", p, "--method", "cut", "--partition", "theta-star"]);
        assert!(direct.status.success() && cut.status.success());
        assert_eq!(total(&stdout(&direct)), total(&stdout(&cut)));
        let check = mostar(&["mostar", p, "--check"]);
        assert!(check.status.success());
    }
}

#[test]
fn fullerene_patch_with_partition_file() {
    let dir = tempfile::tempdir().unwrap();
    let patch = data("fullerene_patch.graph");
    let theta = mostar(&["theta", patch.to_str().unwrap()]);
    assert!(theta.status.success());
    let text = stdout(&theta);
    assert!(text.contains("# theta-star classes: 6\n"));
    assert!(text.contains("# theta transitive: no\n"));

    // merge every class except the one holding edge 0
    let classes: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    let first = classes
        .iter()
        .find(|l| l.split_whitespace().any(|t| t == "0"))
        .unwrap();
    let rest: Vec<&str> = classes.iter().filter(|l| *l != first).copied().collect();
    let partition = format!("{first}\n{}\n", rest.join(" "));
    let ppath = dir.path().join("two.partition");
    std::fs::write(&ppath, partition).unwrap();

    let out = mostar(&[
        "mostar",
        patch.to_str().unwrap(),
        "--method",
        "cut",
        "--partition",
        ppath.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(total(&text), "150");
    assert!(text.contains("\n0\t10\t"));
}

#[test]
fn benzenoid_command_reports_breakdown() {
    let cells = data("branched.cells");
    let out = mostar(&["benzenoid", cells.to_str().unwrap(), "--check"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(total(&text), "496");
    let rows: Vec<&str> = text.lines().filter(|l| l.contains("\ttrue\t")).collect();
    let values: Vec<&str> = rows
        .iter()
        .map(|r| r.rsplit('\t').next().unwrap())
        .collect();
    assert_eq!(values, vec!["112", "192", "192"]);
}

#[test]
fn quotient_command_emits_a_weighted_graph() {
    let hex = data("hexagon.graph");
    let out = mostar(&["quotient", hex.to_str().unwrap(), "--class", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, vec!["2 1", "0 1", "3 3", "2"]);
}

#[test]
fn structured_output_mirrors_report() {
    let cells = data("branched.cells");
    let out = mostar(&[
        "--format",
        "structured",
        "benzenoid",
        cells.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["method"], "benzenoid");
    assert_eq!(json["total"], 496);
    assert_eq!(json["per_class"][0]["mostar"], 112);
}

#[test]
fn output_is_byte_deterministic() {
    let patch = data("fullerene_patch.graph");
    let args = [
        "mostar",
        patch.to_str().unwrap(),
        "--method",
        "direct",
        "--breakdown",
    ];
    let a = mostar(&args);
    let b = mostar(&[
        "--threads",
        "3",
        "mostar",
        patch.to_str().unwrap(),
        "--method",
        "direct",
        "--breakdown",
    ]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, mostar(&args).stdout);
}

#[test]
fn failures_map_to_distinct_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.graph");
    std::fs::write(&bad, "3 2\n0 1\n1 q\n").unwrap();
    let parse = mostar(&["mostar", bad.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&parse.stderr).contains("line 3"));

    let split = dir.path().join("split.graph");
    std::fs::write(&split, "4 2\n0 1\n2 3\n").unwrap();
    let disconnected = mostar(&["mostar", split.to_str().unwrap()]);

    let singletons = dir.path().join("single.partition");
    std::fs::write(&singletons, "0\n1\n2\n3\n4\n5\n").unwrap();
    let hex = data("hexagon.graph");
    let not_c = mostar(&[
        "mostar",
        hex.to_str().unwrap(),
        "--method",
        "cut",
        "--partition",
        singletons.to_str().unwrap(),
    ]);
    assert!(String::from_utf8_lossy(&not_c.stderr).contains("c-partition"));

    let codes = [
        parse.status.code(),
        disconnected.status.code(),
        not_c.status.code(),
    ];
    assert!(codes.iter().all(|c| matches!(c, Some(c) if *c != 0)));
    assert_ne!(codes[0], codes[1]);
    assert_ne!(codes[1], codes[2]);
    assert_ne!(codes[0], codes[2]);

    let skipped = mostar(&[
        "mostar",
        hex.to_str().unwrap(),
        "--method",
        "cut",
        "--skip-validation",
        "--partition",
        singletons.to_str().unwrap(),
    ]);
    assert!(skipped.status.success());
}

#[test]
fn weighted_file_round_trip_through_cli() {
    let sq = data("weighted_square.graph");
    let direct = mostar(&["mostar", sq.to_str().unwrap(), "--method", "direct"]);
    let cut = mostar(&["mostar", sq.to_str().unwrap(), "--method", "cut"]);
    assert_eq!(total(&stdout(&direct)), total(&stdout(&cut)));
}
