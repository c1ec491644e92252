use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use bimenger::format::{parse, serialize, Document};
use bimenger::generators::gen_grid;

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bimenger-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bimenger")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &PathBuf, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn fixture(dir: &PathBuf, name: &str) -> String {
    let o = bin(&["gen", "fixture", name]);
    assert_eq!(o.status.code(), Some(0));
    write(dir, &format!("{name}.bgf"), &stdout(&o))
}

/// Runs a command with `--json`, then validates the certificate with `check`.
fn certified(dir: &PathBuf, graph: &str, args: &[&str]) -> (i32, String) {
    let mut all = args.to_vec();
    all.extend(["--graph", graph, "--json"]);
    let o = bin(&all);
    let cert = stdout(&o);
    let path = write(dir, "cert.json", &cert);
    let c = bin(&["check", "--graph", graph, "--cert", &path]);
    assert_eq!(c.status.code(), Some(0), "{}\n{cert}", stdout(&c));
    (o.status.code().unwrap(), cert)
}

#[test]
fn fig6_keeps_the_prescribed_start() {
    let dir = scratch("fig6");
    let g = fixture(&dir, "fig6");
    let p = write(&dir, "p1.bgf", "path x1 x1y2 y2\n");
    let o = bin(&["menger-vertex", "--graph", &g, "--x", "X", "--y", "Y", "--paths", &p]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("path x1 x1y1 y1"), "{text}");
    assert!(text.contains("path x2 x2y2 y2"), "{text}");
    let (code, cert) = certified(&dir, &g, &["menger-vertex", "--x", "X", "--y", "Y", "--paths", &p]);
    assert_eq!(code, 0);
    assert!(cert.contains("\"outcome\": \"paths\""));
}

#[test]
fn growing_a_family_ends_in_a_separator() {
    let dir = scratch("grow");
    let g = fixture(&dir, "fig6");
    let (code, _) = certified(&dir, &g, &["menger-vertex", "--x", "X", "--y", "Y", "--k", "1"]);
    assert_eq!(code, 0);
    let (code, cert) = certified(&dir, &g, &["menger-vertex", "--x", "X", "--y", "Y", "--k", "2"]);
    assert_eq!(code, 1);
    assert!(cert.contains("\"separator\""));
}

#[test]
fn grid_set_is_not_clean() {
    let dir = scratch("grid");
    let o = bin(&["gen", "grid", "--k", "1"]);
    let g = write(&dir, "grid1.bgf", &stdout(&o));
    let (code, cert) = certified(&dir, &g, &["clean", "--x", "X"]);
    assert_eq!(code, 1);
    assert!(cert.contains("\"outcome\": \"false\""));
    // vertex Menger refuses with the same kind of witness
    let (code, cert) = certified(&dir, &g, &["menger-vertex", "--x", "X", "--y", "Y"]);
    assert_eq!(code, 2);
    assert!(cert.contains("\"outcome\": \"precondition\""));
}

#[test]
fn edge_counterexample_is_refused() {
    let dir = scratch("edge");
    let o = bin(&["gen", "edge-counterexample", "--k", "1"]);
    let text = stdout(&o);
    assert!(text.starts_with("# terminals x y\n"));
    let g = write(&dir, "ec.bgf", &text);
    let (code, _) = certified(&dir, &g, &["menger-edge", "--x", "x", "--y", "y"]);
    assert_eq!(code, 2);
}

#[test]
fn gen_grid_round_trips() {
    let o = bin(&["gen", "grid", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = parse(&stdout(&o)).unwrap();
    let (g, x, y) = gen_grid(2).unwrap();
    let mut want = Document::new(g);
    want.sets.insert("X".into(), x);
    want.sets.insert("Y".into(), y);
    assert_eq!(serialize(&doc), serialize(&want));
    assert_eq!(serialize(&doc), stdout(&o));
}

#[test]
fn paths_and_trails_differ_on_the_lollipop() {
    let dir = scratch("fig8");
    let g = fixture(&dir, "fig8");
    let (code, _) = certified(&dir, &g, &["paths", "--from", "u:-", "--to", "w:+"]);
    assert_eq!(code, 1);
    let (code, cert) = certified(&dir, &g, &["trail", "--from", "u:-", "--to", "w:+"]);
    assert_eq!(code, 0);
    assert!(cert.contains("\"bm\""));
    let (code, _) = certified(&dir, &g, &["edge-clean", "--x", "m"]);
    assert_eq!(code, 1);
    let (code, _) = certified(&dir, &g, &["edge-clean", "--x", "u"]);
    assert_eq!(code, 0);
}

#[test]
fn connectivity_and_appendage() {
    let dir = scratch("conn");
    let g = fixture(&dir, "two-cycle");
    let (code, cert) = certified(&dir, &g, &["connectivity"]);
    assert_eq!(code, 0);
    assert!(cert.contains("\"strongly-connected\": true"));
    let g = fixture(&dir, "path2");
    let (code, _) = certified(&dir, &g, &["connectivity"]);
    assert_eq!(code, 1);
    let p = write(&dir, "base.bgf", "path u e1 v\n");
    let (code, cert) = certified(&dir, &g, &["appendage", "--x", "u", "--paths", &p]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&cert).unwrap();
    assert!(v["edges"].is_null(), "{cert}");
}

#[test]
fn parse_errors_exit_3_with_a_position() {
    let dir = scratch("parse");
    let g = write(&dir, "bad.bgf", "bgf 1\nv u\n\ne l u + u -\n");
    let o = bin(&["connectivity", "--graph", &g]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
    assert_eq!(bin(&["menger-vertex"]).status.code(), Some(3));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
    let g = fixture(&dir, "fig6");
    let o = bin(&["menger-vertex", "--graph", &g, "--x", "X", "--y", "Nope"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn certificates_are_deterministic() {
    let dir = scratch("det");
    let o = bin(&["gen", "random", "--n", "7", "--m", "14", "--seed", "9"]);
    let g = write(&dir, "r.bgf", &stdout(&o));
    assert_eq!(stdout(&o), stdout(&bin(&["gen", "random", "--n", "7", "--m", "14", "--seed", "9"])));
    for args in [
        vec!["menger-vertex", "--x", "X", "--y", "Y", "--k", "1", "--no-precondition-check"],
        vec!["connectivity"],
    ] {
        let mut a = args.clone();
        a.extend(["--graph", &g, "--json"]);
        let first = bin(&a);
        let second = bin(&a);
        assert_eq!(first.stdout, second.stdout);
    }
}

#[test]
fn timings_only_on_request() {
    let dir = scratch("time");
    let g = fixture(&dir, "fig6");
    let (_, plain) = certified(&dir, &g, &["menger-vertex", "--x", "X", "--y", "Y"]);
    assert!(!plain.contains("timings_ms"));
    let (_, timed) = certified(&dir, &g, &["menger-vertex", "--x", "X", "--y", "Y", "--timings"]);
    assert!(timed.contains("timings_ms"));
}

#[test]
fn oracle_modes() {
    let dir = scratch("oracle");
    let g = fixture(&dir, "fig6");
    let o = bin(&["oracle", "--graph", &g, "--x", "X", "--y", "Y", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["max_disjoint"], 2);
    let g = fixture(&dir, "ext");
    let o = bin(&["oracle", "--graph", &g, "--x", "x'", "--y", "x", "--mode", "edge"]);
    assert!(stdout(&o).contains("max disjoint paths: 4"), "{}", stdout(&o));
    let o = bin(&["oracle", "--seed", "3", "--count", "40"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
