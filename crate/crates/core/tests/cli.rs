use std::fs;
use std::process::Command;

fn dynbc(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_dynbc")).args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn generate_then_inspect() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("dm.txt");
    let graph = graph.to_str().unwrap();
    dynbc(&["generate", "--model", "dm", "--n", "60", "--seed", "2", "--out", graph]);
    assert!(fs::read_to_string(graph).unwrap().starts_with("# n=60 m=117"));

    let bounds = dynbc(&["vd-bounds", "--graph", graph]);
    let field = |key: &str| -> f64 {
        let line = bounds.lines().find(|l| l.starts_with(key)).unwrap();
        line.split('\t').nth(1).unwrap().split(' ').next().unwrap().parse().unwrap()
    };
    assert!(field("lower") <= field("upper"));
    assert!(field("upper") <= field("component") * 2.0);

    let exact = dynbc(&["exact", "--graph", graph]);
    assert_eq!(exact.lines().count(), 60);
}

#[test]
fn run_writes_one_row_per_run() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let out = dir.path().join("rows.jsonl");
    dynbc(&["generate", "--model", "er", "--n", "80", "--p", "0.08", "--weights", "int:1:3", "--out", graph.to_str().unwrap()]);
    dynbc(&[
        "run", "--graph", graph.to_str().unwrap(), "--weighted", "--scenario", "weights", "--x", "8",
        "--batch-sizes", "1,8", "--runs", "2", "--with-exact", "--output-format", "jsonl",
        "--out", out.to_str().unwrap(),
    ]);
    let rows: Vec<serde_json::Value> =
        fs::read_to_string(&out).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 4);
    for r in &rows {
        assert_eq!(r["mode"], "DAW");
        assert!(r["max_abs_error"].as_f64().unwrap() <= 0.1);
    }
}

#[test]
fn temporal_real_dynamics_csv() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("t.txt");
    fs::write(&graph, "1 2 1 30\n2 3 1 10\n3 4 1 20\n4 1 1 40\n1 3 1 50\n").unwrap();
    let csv = dynbc(&[
        "run", "--graph", graph.to_str().unwrap(), "--format", "temporal", "--scenario", "real",
        "--mode", "ia", "--x", "2", "--batch-sizes", "1,2", "--runs", "1",
    ]);
    let lines: Vec<_> = csv.lines().collect();
    assert!(lines[0].starts_with("graph,n,m,mode"));
    assert_eq!(lines.len(), 3);
}

#[test]
fn bad_input_fails_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("bad.txt");
    fs::write(&graph, "0 1\n0\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_dynbc"))
        .args(["exact", "--graph", graph.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}
