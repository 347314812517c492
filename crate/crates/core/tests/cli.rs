use std::process::{Command, Output};

use rdyck::paths::parse_word;
use rdyck::qpoly::QPolyMatrix;
use rdyck::tilings::Tiling;

fn rdyck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdyck")).args(args).env_remove("RDYCK_MAX_CELLS").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = rdyck(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn paths_listing() {
    let v = json(&["paths", "--a", "2", "--b", "3", "--n", "1", "--format", "json"]);
    let words: Vec<&str> = v["paths"].as_array().unwrap().iter().map(|p| p["word"].as_str().unwrap()).collect();
    assert_eq!(words, ["NNEEE", "NENEE"]);
    assert_eq!(v["paths"][1]["steps"], serde_json::json!([0, 1]));
    assert!(stdout(&["paths", "--n", "3"]).starts_with("5 paths"));
    let fig = json(&["paths", "--a", "3", "--b", "5", "--n", "1", "--format", "json"]);
    let target = parse_word("NENENE^3").unwrap().to_string();
    assert!(fig["paths"].as_array().unwrap().iter().any(|p| p["word"] == target.as_str()));
}

#[test]
fn paths_listing_is_summarised_when_long() {
    let out = stdout(&["paths", "--n", "8"]);
    assert_eq!(out, "1430 paths");
    assert_eq!(stdout(&["paths", "--n", "8", "--full"]).lines().count(), 1431);
}

#[test]
fn zeta_output() {
    assert_eq!(stdout(&["zeta", "--a", "2", "--b", "3", "--path", "NEN^2E^3NE^2"]), "1+2q+3q^2+3q^3+3q^4+q^5+q^6");
    assert_eq!(stdout(&["zeta", "--a", "2", "--b", "3", "--path", "NNEEE"]), "1");
    assert_eq!(stdout(&["zeta", "--path", "NENE", "--format", "json"]), "[1,1]");
}

#[test]
fn matrix_output_round_trips() {
    let v = json(&["matrix", "--a", "1", "--b", "2", "--n", "2", "--e", "3", "--invert", "--format", "json"]);
    let m = QPolyMatrix::from_json(&v).unwrap();
    assert_eq!(m.entry("ENEEN", "NNEEE").unwrap().to_string(), "q+q^4");
    assert_eq!(stdout(&["matrix", "--n", "0", "--e", "0", "--format", "json"]), r#"{"basis":[""],"entries":[[[1]]]}"#);
    assert!(stdout(&["matrix", "--n", "1", "--e", "1", "--format", "latex"]).starts_with("\\begin{pmatrix}"));
}

#[test]
fn exit_codes() {
    assert_eq!(rdyck(&["matrix", "--n", "5", "--e", "5"]).status.code(), Some(3));
    assert!(rdyck(&["matrix", "--n", "5", "--e", "5", "--max-cells", "10"]).status.success());
    let capped = Command::new(env!("CARGO_BIN_EXE_rdyck"))
        .args(["matrix", "--n", "1", "--e", "1"])
        .env("RDYCK_MAX_CELLS", "1")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
    assert_eq!(rdyck(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(rdyck(&["zeta", "--path", "NEX"]).status.code(), Some(2));
    assert_eq!(rdyck(&["zeta", "--a", "2", "--b", "4", "--path", "NNEEEE"]).status.code(), Some(2));
    assert_eq!(rdyck(&["decompose", "--path", "NE", "--format", "latex"]).status.code(), Some(2));
}

#[test]
fn decompose_worked_path() {
    let v = json(&["decompose", "--a", "2", "--b", "3", "--path", "NENENE^2NE^2", "--format", "json"]);
    assert_eq!(v["grid"], serde_json::json!([["NENE", "NENE", "NNEE"], ["ENEN", "NENE", "NENE"]]));
    assert_eq!(v["stirling"], "123344432211");
    assert_eq!(v["nu"], serde_json::json!([[1, 3, 4, 2], [2, 4, 3, 1], [3, 4, 2, 1]]));
}

#[test]
fn stirling_both_ways() {
    assert_eq!(stdout(&["stirling", "--b", "3", "0,1,2,4"]), "123344432211");
    assert_eq!(stdout(&["stirling", "--b", "3", "--invert", "123344432211"]), "0124");
}

#[test]
fn words_of_tilings() {
    assert!(stdout(&["hermite", "--path", "NENE", "--upper", "NENE"]).ends_with("omega=21"));
    assert!(stdout(&["dts", "--path", "NNNEENEE", "--upper", "N^4E^4"]).ends_with("word=4321"));
    let t = json(&["dts", "--invert", "--word", "2431", "--path", "NENNEENE", "--format", "json"]);
    let tiling = Tiling::from_json(&t).unwrap();
    assert_eq!(tiling.upper, parse_word("N^4E^4").unwrap());
    let inline = t.to_string();
    assert!(stdout(&["hermite", "--tiling", &inline]).ends_with("omega=3214"));
    assert!(stdout(&["dts", "--tiling", &inline]).ends_with("word=2431"));
    let listed = json(&["dts", "--path", "NENENE", "--side", "left", "--format", "json"]);
    assert_eq!(listed.as_array().unwrap().len(), 6);
}

#[test]
fn weights_of_tilings() {
    for line in stdout(&["weight", "--a", "1", "--b", "2", "--path", "NEENEENEE"]).lines() {
        let (w, f) = line.rsplit_once("  formula=").unwrap();
        assert!(w.ends_with(&format!("weight={f}")), "{line}");
    }
}

#[test]
fn verify_suites_pass() {
    for suite in ["golden", "duality-n4", "counting"] {
        let out = stdout(&["verify", suite]);
        assert!(!out.contains("FAIL"), "{out}");
    }
}
