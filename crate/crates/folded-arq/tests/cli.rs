use serde_json::Value;
use std::process::{Command, Output};

fn arq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arq")).args(args).output().expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn enumerate_lists_every_class() {
    let out = arq(&["enumerate", "--n", "4"]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 16);
    assert!(rows.iter().all(|r| r["round_trip"] == true));
    assert!(rows.iter().any(|r| r["element"] == "(2 1 3 5)v"));
}

#[test]
fn build_and_render_round_trip() {
    let dir = std::env::temp_dir().join(format!("arq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.quiver.json");
    let out = arq(&["build", "--n", "4", "--twisted-coxeter", "2 1 3 5", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let rendered = arq(&["render", "--input", path.to_str().unwrap(), "--format", "text"]);
    let direct = arq(&["build", "--n", "4", "--twisted-coxeter", "2 1 3 5", "--format", "text"]);
    assert!(rendered.status.success());
    assert_eq!(rendered.stdout, direct.stdout);
    let dot = arq(&["render", "--input", path.to_str().unwrap(), "--format", "dot"]);
    assert!(String::from_utf8_lossy(&dot.stdout).starts_with("digraph"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gdist_reports_both_methods() {
    let out = arq(&["gdist", "--n", "4", "--class", "5 3 2 1", "--pair", "<1,-4> <2,3>"]);
    assert!(out.status.success());
    let r = &json_lines(&out)[0];
    assert_eq!(r["brute"]["gdist"], 2);
    assert_eq!(r["closed"]["gdist"], 2);
    assert_eq!(r["agree"], true);
}

#[test]
fn denom_prints_factor_lists() {
    let out = arq(&["denom", "--type", "C", "--n", "3", "--k", "1", "--l", "2"]);
    let r = &json_lines(&out)[0];
    assert_eq!(r["text"], "(z - (-qs)^3) (z - (-qs)^7)");
    assert_eq!(r["factors"][0]["sign"], -1);
    assert_eq!(r["factors"][0]["exp"], 3);
    let verified = arq(&["denom", "--type", "c", "--n", "3", "--verify"]);
    assert!(verified.status.success());
}

#[test]
fn dorey_verdicts() {
    let yes = json_lines(&arq(&["dorey", "--n", "4", "--triple", "1:2 2:-1 3:0"]));
    assert_eq!(yes[0]["verdict"], true);
    assert_eq!(yes[0]["branch"], "Target");
    let no = json_lines(&arq(&["dorey", "--n", "4", "--triple", "1:0 2:0 3:0"]));
    assert_eq!(no[0]["verdict"], false);
    let realized = json_lines(&arq(&["dorey", "--n", "4", "--class", "2 1 3 5", "--triple", "1:2 2:-1 3:0"]));
    assert_eq!(realized[0]["realized"]["minimal_pair"], true);
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = arq(&["verify", "--suite", "gdist", "--n", "3", "--method", "both"]);
    assert!(out.status.success());
    let lines = json_lines(&out);
    assert_eq!(lines.last().unwrap()["summary"], true);
    assert_eq!(lines[0]["checked"], 528);

    let bad = arq(&["verify", "--suite", "nonsense"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("nonsense"));
}

#[test]
fn extension_bound_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_arq"))
        .args(["enumerate", "--n", "4", "--words", "2 1 3 5"])
        .env("ARQ_MAX_EXTENSIONS", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound 100"));
    let ok = arq(&["enumerate", "--n", "4", "--words", "2 1 3 5"]);
    assert!(ok.status.success());
    assert_eq!(json_lines(&ok).len(), 3363);
}
