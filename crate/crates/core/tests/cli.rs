use std::path::{Path, PathBuf};

use menger4::cli::run;
use menger4::fixture;
use menger4::format::parse_graph;

fn call(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["menger4"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_fixture(dir: &Path) -> PathBuf {
    let path = dir.join("counter.txt");
    let (code, out, _) = call(&["fixture", "counterexample", "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("wrote"));
    path
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn fixture_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(dir.path());
    let parsed = parse_graph(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let (g, t) = fixture::counterexample();
    assert_eq!(parsed.graph, g);
    assert_eq!(parsed.terminals, Some(t));
    assert_eq!(g.vertex_count(), 6);
    assert_eq!(g.edge_count(), 7);

    let (code, out, _) = call(&["fixture", "counterexample"]);
    assert_eq!(code, 0);
    assert_eq!(parse_graph(&out).unwrap().graph, g);
}

#[test]
fn resilience_prints_k_and_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(dir.path());
    let (code, out, _) = call(&["resilience", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("k=2"));
    assert_eq!(lines.next(), Some("certificate: e0+e6"));
}

#[test]
fn json_matches_text() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(dir.path());
    let p = path.to_str().unwrap();
    let (_, out, _) = call(&["--format", "json", "resilience", p]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["k"], 2);
    assert_eq!(v["certificate"], serde_json::json!([0, 6]));

    let (code, out, _) = call(&["pack", p, "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["k"], 1);
    assert_eq!(v["chains"], serde_json::json!([[0, 1, 4, 5]]));
    let (_, text, _) = call(&["pack", p]);
    assert_eq!(text, "k=1\nchain: e0+e1+e4+e5\n");
}

#[test]
fn pack_above_maximum_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(dir.path());
    let (code, out, _) = call(&["pack", path.to_str().unwrap(), "-k", "2"]);
    assert_eq!(code, 2);
    assert!(out.contains("maximum packing is 1"), "{out}");

    let (code, out, _) = call(&["pack", path.to_str().unwrap(), "-k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn paths_and_check6() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(dir.path());
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["paths", p, "-k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "k=1\nsplit 1:\n  v0 -e0- v4 -e1- v1\n  v2 -e4- v5 -e5- v3\n");
    assert_eq!(call(&["paths", p, "-k", "2"]).0, 2);

    let (code, out, _) = call(&["check6", p, "-k", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ok=true\n"));
    let (code, out, _) = call(&["check6", p, "-k", "2"]);
    assert_eq!(code, 2);
    assert!(out.starts_with("ok=false\n"));
}

#[test]
fn augment_writes_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(dir.path());
    let (code, out, _) = call(&["augment", path.to_str().unwrap(), "--plan", "4-5"]);
    assert_eq!(code, 0);
    let f = parse_graph(&out).unwrap();
    assert_eq!(f.graph.edge_count(), 8);
    let aug = write(dir.path(), "aug.txt", &out);
    assert_eq!(call(&["pack", aug.to_str().unwrap(), "-k", "2"]).0, 0);

    let (code, _, err) = call(&["augment", path.to_str().unwrap(), "--plan", "4-0"]);
    assert_eq!(code, 1);
    assert!(err.contains("plan"));
}

#[test]
fn decompose_and_extract() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "tri.txt", "v 4\ne 0 1\ne 1 2\ne 2 0\ne 0 3\n");
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["decompose", p, "--chain", "e0+e1+e2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
    assert_eq!(call(&["decompose", p, "--chain", "e0"]).0, 1);

    let (code, out, _) = call(&["extract", p, "--chain", "e0+e1+e2+e3"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    let first = lines.next().unwrap();
    assert!(first.starts_with("v0") && first.ends_with("v3"), "{first}");
    let (code, _, _) = call(&["extract", p, "--chain", "e3", "--from", "3", "--to", "0"]);
    assert_eq!(code, 0);
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let no_t = write(dir.path(), "no_t.txt", "v 4\ne 0 1\n");
    let (code, _, err) = call(&["resilience", no_t.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("`t`"), "{err}");

    let looped = write(dir.path(), "loop.txt", "v 4\ne 2 2\n");
    let (code, _, err) = call(&["resilience", looped.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");

    assert_eq!(call(&["resilience", "/nonexistent/graph"]).0, 1);
    assert_eq!(call(&["frobnicate"]).0, 1);
    assert_eq!(call(&["pack"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn selftest_passes() {
    let (code, out, _) = call(&["selftest", "--instances", "40", "--seed", "3", "--even-interior"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("40 instances, 0 failures"));
}
