use std::io::Write;
use std::process::{Command, Output};

fn factorkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factorkit")).args(args).output().unwrap()
}

fn temp_graph(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("factorkit-cli-{}-{name}", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path
}

#[test]
fn gen_then_factor() {
    let out = factorkit(&["gen", "--n", "6", "--trees", "4", "--bipartite", "--functions", "1", "--seed", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("p multigraph 6 20\n"));
    let path = temp_graph("gen.txt", &text);
    let out = factorkit(&["factor", "--graph", path.to_str().unwrap(), "--method", "bipartite-gf", "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["outcome"], "factor");
    assert_eq!(json["theorem"], "bipartite-gf");
    assert!(json["derivation"].as_array().is_some_and(|d| !d.is_empty()));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--theorem", "tutte-equiv", "--trials", "30", "--seed", "9", "--format", "json"];
    let (a, b) = (factorkit(&args), factorkit(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    let missing = factorkit(&["bi", "--graph", "/nonexistent/graph.txt"]);
    assert_eq!(missing.status.code(), Some(2));
    let bad = temp_graph("bad.txt", "p multigraph 2 1\ne 1 5\n");
    let out = factorkit(&["toughness", "--graph", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let unknown = factorkit(&["verify", "--theorem", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn refusal_is_reported_not_failed() {
    // a 4-cycle is only 1-tree-connected; k = 1 needs 4 trees
    let path = temp_graph("c4.txt", "p multigraph 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\nf 1 1 2\nf 2 1 2\nf 3 1 2\nf 4 1 2\n");
    let out = factorkit(&["factor", "--graph", path.to_str().unwrap(), "--method", "bipartite-gf"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("refused: hypothesis `tree-connectivity`"));
    let out = factorkit(&["factor", "--graph", path.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("factor "));
}
