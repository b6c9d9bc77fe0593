use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use tough_ham::generate::complete_split_join;
use tough_ham::graph6::encode_graph6;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tough-ham")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn split_join_file(dir: &Path) -> PathBuf {
    let line = encode_graph6(&complete_split_join(22, 2)).unwrap();
    write(dir, "g.g6", &format!("{line}\n"))
}

#[test]
fn run_then_check_passes() {
    let dir = TempDir::new().unwrap();
    let graph = split_join_file(dir.path());
    let cert = dir.path().join("c.txt");
    let o = bin(&["run", "--input", graph.to_str().unwrap(), "--out", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let body = std::fs::read_to_string(&cert).unwrap();
    let certs: Vec<&str> = body.lines().filter(|l| l.starts_with("cert\t")).collect();
    assert_eq!(certs.len(), 1);
    assert!(certs[0].contains("kind=hamilton_cycle"));

    let o = bin(&["check", "--graph", graph.to_str().unwrap(), "--cert", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict=pass"));
}

#[test]
fn corrupted_cycle_names_the_missing_edge() {
    let dir = TempDir::new().unwrap();
    let graph = split_join_file(dir.path());
    // 22 and 23 form the independent side, so the identity order breaks there
    let order: Vec<String> = (0..24).map(|v| v.to_string()).collect();
    let cert = write(
        dir.path(),
        "bad.txt",
        &format!("cert\tgraph=0\tt=11/1\tkind=hamilton_cycle\torder={}\n", order.join(" ")),
    );
    let o = bin(&["check", "--graph", graph.to_str().unwrap(), "--cert", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("verdict=fail"), "{out}");
    assert!(out.contains("missing edge 22-23"), "{out}");
}

#[test]
fn metrics_on_k5() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "k5.g6", "D~{\n");
    let o = bin(&["metrics", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "tau=inf kappa=4 alpha=1 delta=4 s=inf\n");
}

#[test]
fn metrics_on_a_path() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "p3.g6", "Bg\n");
    let o = bin(&["metrics", "--input", input.to_str().unwrap()]);
    assert_eq!(stdout(&o), "tau=1/2 kappa=1 alpha=2 delta=1 s=1\n");
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let graph = split_join_file(dir.path());
    let g = graph.to_str().unwrap();
    assert_eq!(bin(&["run", "--bogus"]).status.code(), Some(2));
    assert_eq!(bin(&["run", "--input", g, "--t", "0"]).status.code(), Some(2));
    assert_eq!(bin(&["run", "--input", g, "--t", "x/y"]).status.code(), Some(2));
    assert_eq!(bin(&["run", "--input", "/nonexistent/file.g6"]).status.code(), Some(2));
    let junk = write(dir.path(), "junk.g6", "C~~\n");
    assert_eq!(bin(&["metrics", "--input", junk.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(bin(&["survey", "--n", "8", "--count", "2", "--gen", "nope"]).status.code(), Some(2));
}

#[test]
fn graph_outside_the_class_gets_a_forbidden_witness() {
    let dir = TempDir::new().unwrap();
    // P6 contains 2P2 + P1
    let input = write(dir.path(), "p6.g6", &format!("{}\n", encode_p6()));
    let o = bin(&["run", "--input", input.to_str().unwrap(), "--no-trace"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("kind=forbidden") || out.contains("kind=toughness"), "{out}");
}

fn encode_p6() -> String {
    let mut g = tough_ham::graph::Graph::new(6);
    for v in 0..5 {
        g.add_edge(v, v + 1).unwrap();
    }
    encode_graph6(&g).unwrap()
}

#[test]
fn survey_is_deterministic() {
    let args = ["survey", "--n", "9", "--count", "25", "--seed", "7"];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.starts_with("# survey gen=random_in_class n=9 count=25 seed=7\n"), "{out}");
    assert_eq!(out.lines().count(), 2 + 4);
}
