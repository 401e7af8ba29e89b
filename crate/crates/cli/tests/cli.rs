use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};
use shifted_hecke::json::{replay_word, TraceStep};
use shifted_hecke::tableau::Tableau;

fn shecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shecke")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn entries(cell: &Value) -> Vec<String> {
    cell["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| format!("{}{}", e["n"], if e["primed"].as_bool().unwrap() { "'" } else { "" }))
        .collect()
}

#[test]
fn insert_reports_p_and_q() {
    let v = json_of(&shecke(&["insert", "--mode", "sp", "--word", "4,2,2,3"]));
    assert_eq!(v["p"]["shape"], json!([2, 1]));
    assert_eq!(v["q"]["kind"], "shifted");
    let q: Vec<Vec<String>> = v["q"]["cells"].as_array().unwrap().iter().map(entries).collect();
    assert_eq!(q, [vec!["1"], vec!["2'", "3'"], vec!["4"]]);
}

#[test]
fn insert_with_factorization() {
    let v = json_of(&shecke(&[
        "insert",
        "--mode",
        "o",
        "--word",
        "4,5,1,1,3,2",
        "--factorization",
        "1,1,3,3,3,5",
    ]));
    let qi: Vec<Vec<String>> =
        v["q_factorization"]["cells"].as_array().unwrap().iter().map(entries).collect();
    assert_eq!(qi, [vec!["1"], vec!["1"], vec!["3'", "3'"], vec!["5'"], vec!["3"]]);
    let bad = shecke(&["insert", "--mode", "o", "--word", "4,5,1,1,3,2", "--factorization", "1,1,1,3,3,5"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn trace_replays_to_p() {
    let word = [4, 2, 6, 1, 7, 5, 3, 4, 2, 1, 3, 2];
    let v = json_of(&shecke(&["insert", "--mode", "sp", "--word", "4,2,6,1,7,5,3,4,2,1,3,2", "--trace"]));
    let trace: Vec<TraceStep> = serde_json::from_value(v["trace"].clone()).unwrap();
    assert_eq!(trace[0].label, [1, 1]);
    let p: shifted_hecke::json::TableauJson = serde_json::from_value(v["p"].clone()).unwrap();
    assert_eq!(replay_word(&word, &trace).unwrap(), p.to_tableau().unwrap());
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("shecke-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn uninsert_inverts_insert() {
    for (mode, word) in [("sp", "6,2,2,4,5,3"), ("o", "4,5,1,1,3,2")] {
        let v = json_of(&shecke(&["insert", "--mode", mode, "--word", word]));
        let p = temp_file(&format!("{mode}-p.json"), &v["p"].to_string());
        let q = temp_file(&format!("{mode}-q.json"), &v["q"].to_string());
        let back = json_of(&shecke(&[
            "uninsert",
            "--mode",
            mode,
            "--p",
            p.to_str().unwrap(),
            "--q",
            q.to_str().unwrap(),
        ]));
        assert_eq!(back, v["word"]);
        std::fs::remove_file(p).unwrap();
        std::fs::remove_file(q).unwrap();
    }
    let missing =
        shecke(&["uninsert", "--mode", "sp", "--p", "/nonexistent/p.json", "--q", "/nonexistent/q.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn words_slice() {
    let v = json_of(&shecke(&["words", "--mode", "sp", "--target", "4,3,2,1", "--max-len", "3"]));
    assert_eq!(v, json!([[2, 1], [2, 1, 1], [2, 1, 3], [2, 2, 1], [2, 2, 3], [2, 3], [2, 3, 1], [2, 3, 3]]));
    let v =
        json_of(&shecke(&["words", "--mode", "plain", "--target", "3,2,1", "--max-len", "6", "--reduced"]));
    assert_eq!(v, json!([[1, 2, 1], [2, 1, 2]]));
}

#[test]
fn atoms_and_classes() {
    let v = json_of(&shecke(&["atoms", "--mode", "sp", "--target", "4,3,2,1"]));
    assert_eq!(v, json!([[1, 3, 4, 2], [3, 1, 2]]));
    let v = json_of(&shecke(&["atoms", "--mode", "o", "--target", "3,2,1", "--hecke"]));
    assert_eq!(v, json!([[2, 3, 1], [3, 1, 2], [3, 2, 1]]));
    let v = json_of(&shecke(&[
        "classes",
        "--rel",
        "sp-kknuth",
        "--word",
        "2,1",
        "--len-cap",
        "4",
        "--alpha-cap",
        "4",
    ]));
    let class = v.as_array().unwrap();
    for w in [json!([2, 1]), json!([2, 1, 1]), json!([2, 3, 1]), json!([2, 1, 3])] {
        assert!(class.contains(&w), "{w}");
    }
}

#[test]
fn expand_and_verify() {
    let v = json_of(&shecke(&["expand", "--mode", "sp", "--target", "4,3,2,1", "--vars", "3", "--deg", "4"]));
    assert_eq!(v["verified"], true);
    assert_eq!(v["coefficients"], json!({"2": 1}));
    assert_eq!(v["residual"], json!([]));
    let v = json_of(&shecke(&["verify", "--mode", "o", "--target", "3,2,1", "--deg", "4"]));
    assert_eq!(v, json!({"mode": "o", "target": [3, 2, 1], "expansion": true, "star_symmetry": true}));
    let v = json_of(&shecke(&["verify", "--mode", "plain", "--target", "3,4,1,2", "--deg", "5"]));
    assert_eq!(v["star_symmetry"], Value::Null);
}

#[test]
fn scan_at_small_caps() {
    for c in ["sp", "o"] {
        let v = json_of(&shecke(&["scan", "--conjecture", c, "--len-cap", "5", "--alpha-cap", "5"]));
        assert_eq!(v["counterexample"], Value::Null);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(shecke(&["insert", "--mode", "sp", "--word", "1,1"]).status.code(), Some(2));
    assert_eq!(shecke(&["insert", "--mode", "sp", "--word", "2,x"]).status.code(), Some(2));
    assert_eq!(shecke(&["words", "--mode", "sp", "--target", "3,2,1"]).status.code(), Some(2));
    assert_eq!(shecke(&["atoms", "--mode", "plain", "--target", "3,2,1"]).status.code(), Some(2));
    assert_eq!(shecke(&["insert", "--mode", "q", "--word", "2"]).status.code(), Some(2));
    let capped = shecke(&["words", "--mode", "sp", "--target", "4,3,2,1", "--max-len", "11"]);
    assert_eq!(capped.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap exceeded"));
    assert!(capped.stdout.is_empty());
}

#[test]
fn output_is_byte_stable() {
    let args = ["insert", "--mode", "sp", "--word", "6,7,5,2,4,5", "--trace"];
    assert_eq!(shecke(&args).stdout, shecke(&args).stdout);
    let args = ["classes", "--rel", "o-ck", "--word", "3,1,2", "--len-cap", "5", "--alpha-cap", "4"];
    assert_eq!(shecke(&args).stdout, shecke(&args).stdout);
}

#[test]
fn pretty_rendering() {
    let out = shecke(&["--pretty", "insert", "--mode", "sp", "--word", "4,2,2,3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let p = Tableau::shifted(&[&[2, 3][..], &[4]]).to_string();
    assert!(text.starts_with(&format!("P:\n{p}\nQ:\n")), "{text}");
    assert!(text.trim_end().ends_with("1 {2',3'}"), "{text}");
}
