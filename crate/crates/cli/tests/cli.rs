use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ncm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncm")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn figure_permutation_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("b.json");
    let svg = dir.path().join("b.svg");
    assert!(ncm(&["generate", "bnm-perm", "--sigma", "2,1,4,3", "-o", path(&inst)]).status.success());

    let file: Value = serde_json::from_str(&std::fs::read_to_string(&inst).unwrap()).unwrap();
    assert_eq!(file["points"].as_array().unwrap().len(), 8);
    assert_eq!(file["kind"], "BNM");
    assert_eq!(file["annotations"]["sigma"], serde_json::json!([2, 1, 4, 3]));

    let out = ncm(&["run", "bt", path(&inst), "--svg", path(&svg)]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["matched"], 8);
    assert_eq!(r["bits_read"], 4);
    assert_eq!(r["perfect"], true);
    assert_eq!(r["edges"], serde_json::json!([[1, 6], [2, 5], [3, 8], [4, 7]]));
    let drawing = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(drawing.matches("<line").count(), 4);

    // the SVG does not feed back into the report
    let again = json(&ncm(&["run", "bt", path(&inst)]));
    assert_eq!(again, r);
}

#[test]
fn markov_generation_is_replayable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        assert!(ncm(&["generate", "markov", "--n", "50", "--seed", "7", "-o", path(p)]).status.success());
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let file: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(file["points"].as_array().unwrap().len(), 100);
    assert_eq!(file["meta"]["seed"], 7);

    let r = json(&ncm(&["run", "greedy", path(&a)]));
    assert_eq!(r["seed"], 7);
    let unmatched = r["unmatched"].as_u64().unwrap();
    assert!(r["matched"].as_u64().unwrap() + unmatched == 100);
    assert!(r["coupling"]["sum_x"].as_u64().unwrap() <= unmatched);
}

#[test]
fn random_convex_and_general() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c.json");
    let g = dir.path().join("g.json");
    assert!(ncm(&["generate", "random-convex", "--n", "6", "--seed", "1", "-o", path(&c)]).status.success());
    let r = json(&ncm(&["run", "bt", path(&c)]));
    assert_eq!(r["perfect"], true);
    assert_eq!(r["bits_read"], 8);

    assert!(ncm(&["generate", "random-general", "--n", "5", "--seed", "2", "-o", path(&g)]).status.success());
    let r = json(&ncm(&["run", "sorted", path(&g)]));
    assert_eq!(r["bits_read"], 15);
    assert_eq!(r["perfect"], true);
    let out = ncm(&["run", "asap", path(&g)]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn duplicate_x_is_a_precondition_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("dup.json");
    let text = r#"{"kind":"MNM","geometry":"general","n":2,"points":[
        {"x":"0","y":"0","color":null},{"x":"0","y":"5","color":null},
        {"x":"3","y":"1","color":null},{"x":"7","y":"4","color":null}]}"#;
    std::fs::write(&p, text).unwrap();
    assert_eq!(ncm(&["run", "sorted", path(&p)]).status.code(), Some(3));
    assert!(ncm(&["run", "greedy", path(&p)]).status.success());
}

#[test]
fn bad_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("x.json");
    assert_eq!(ncm(&["generate", "bnm-perm", "--sigma", "2,3,1", "-o", path(&p)]).status.code(), Some(2));
    assert_eq!(ncm(&["generate", "markov", "-o", path(&p)]).status.code(), Some(2));
    assert_eq!(ncm(&["generate", "mnm-family", "--k", "1", "--j", "1", "--subset", "4", "-o", path(&p)]).status.code(), Some(2));
    assert_eq!(ncm(&["run", "bt", path(&dir.path().join("missing.json"))]).status.code(), Some(2));
    assert_eq!(ncm(&["verify", "bnm-lb", "--n", "9"]).status.code(), Some(2));
    assert_eq!(ncm(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_campaigns() {
    let out = ncm(&["verify", "bnm-lb", "--n", "3"]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["pass"], true);
    let n3 = r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "n=3: cover = C_n").unwrap();
    assert_eq!(n3["measured"]["cover"], 5);

    let r = json(&ncm(&["verify", "catalan-bijections", "--n", "8"]));
    assert_eq!(r["pass"], true);
    let n8 = r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "n=8: counts").unwrap();
    assert_eq!(n8["measured"]["trees"], 1430);
    assert_eq!(n8["measured"]["perm231"], 1430);

    let r = json(&ncm(&["verify", "coupling", "--n", "60", "--trials", "300", "--seed", "11", "--sequential"]));
    assert_eq!(r["params"]["seed"], 11);
    assert_eq!(r["pass"], true);

    let r = json(&ncm(&["verify", "rate-table"]));
    assert_eq!(r["pass"], true);
    assert_eq!(r["checks"].as_array().unwrap().len(), 6);
}

#[test]
fn codec_utilities() {
    let r = json(&ncm(&["codec", "elias-encode", "17"]));
    assert_eq!(r["code"], "001010001");
    let r = json(&ncm(&["codec", "elias-decode", "00011100011100010000"]));
    assert_eq!(r["m"], 10000);
    assert_eq!(ncm(&["codec", "elias-decode", "0001"]).status.code(), Some(2));
    let r = json(&ncm(&["codec", "catalan", "10"]));
    assert_eq!(r["catalan"], "16796");
    assert_eq!(r["width"], 15);
    let r = json(&ncm(&["codec", "unrank", "3", "4"]));
    let perm: Vec<String> = r["perm"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
    let back = json(&ncm(&["codec", "rank-perm", &perm.join(",")]));
    assert_eq!(back["rank"], "4");
    assert_eq!(ncm(&["codec", "rank-perm", "2,3,1"]).status.code(), Some(3));
    assert_eq!(ncm(&["codec", "rank-dyck", "10"]).status.code(), Some(2));
}
