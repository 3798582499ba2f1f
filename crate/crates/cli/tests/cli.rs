use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn vdgame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vdgame")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("vdgame-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, file: &str, text: &str) -> String {
    let p = dir.join(file);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const C6: &str = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";

#[test]
fn solve_c6_under_ndak() {
    let dir = scratch("solve");
    let c6 = write(&dir, "c6.txt", C6);
    let out = vdgame(&["solve", "--game", "csg:2", "--input", &c6]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l == "outcome: N"), "{}", stdout(&out));
    let out = vdgame(&["solve", "--game", "arc-kayles", "--input", &c6, "--grundy"]);
    assert!(stdout(&out).lines().any(|l| l == "outcome: P"));
    assert!(stdout(&out).lines().any(|l| l == "grundy: 0"));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let dir = scratch("json");
    let c6 = write(&dir, "c6.txt", C6);
    let args = ["solve", "--game", "node-kayles", "--input", &c6, "--grundy", "--json"];
    let (a, b) = (vdgame(&args), vdgame(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], "vdgame.solve/1");
    assert_eq!(v["grundy"], 0);
}

#[test]
fn sequence_reports_period_34() {
    let out = vdgame(&["sequence", "--game", "arc-kayles", "--family", "path", "--max-n", "120", "--detect-period"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "period: 34"), "{text}");
    assert!(text.lines().any(|l| l == "preperiod: 52"), "{text}");
}

#[test]
fn exit_codes() {
    let dir = scratch("exit");
    assert_eq!(vdgame(&["solve"]).status.code(), Some(1));
    assert_eq!(vdgame(&["solve", "--game", "csg:2", "--input", "/nonexistent/g.txt"]).status.code(), Some(2));
    let bad = write(&dir, "bad.txt", "3 2\n0 1\n1 1\n");
    let out = vdgame(&["solve", "--game", "csg:2", "--input", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let path = write(&dir, "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(vdgame(&["symmetry", "--input", &path]).status.code(), Some(4));
    let c6 = write(&dir, "c6.txt", C6);
    let out = vdgame(&["symmetry", "--input", &c6]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("<->"));
    assert_eq!(vdgame(&["verify", "--suite", "no-such-suite"]).status.code(), Some(1));
}

#[test]
fn gen_then_reduce_round_trip() {
    let dir = scratch("reduce");
    let g = dir.join("p3.txt");
    let out = vdgame(&["gen", "--family", "path:3", "--output", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(fs::read_to_string(&g).unwrap(), "3 2\n0 1\n1 2\n");
    let h = dir.join("h.txt");
    let out = vdgame(&["reduce", "--from", "node-kayles", "--input", g.to_str().unwrap(), "--set", "2", "--output", h.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(h.with_extension("map").exists());
    let nk = vdgame(&["solve", "--game", "node-kayles", "--input", g.to_str().unwrap(), "--grundy"]);
    let csg = vdgame(&["solve", "--game", "csg:2", "--input", h.to_str().unwrap(), "--grundy"]);
    let grundy = |o: &Output| stdout(o).lines().find(|l| l.starts_with("grundy:")).map(str::to_string);
    assert_eq!(grundy(&nk), grundy(&csg));
}

#[test]
fn kernelize_writes_and_reuses_a_catalog() {
    let dir = scratch("kernel");
    let cat = dir.join("catalog.txt");
    let g = write(&dir, "c6.txt", C6);
    let args = ["kernelize", "--input", &g, "--catalog", cat.to_str().unwrap(), "--json"];
    let first = vdgame(&args);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stderr));
    assert!(fs::read_to_string(&cat).unwrap().starts_with("vdgame-catalog 1\n"));
    let second = vdgame(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_suite_passes() {
    let out = vdgame(&["verify", "--suite", "gi"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().all(|l| !l.starts_with("FAIL")));
}
