use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use corita::coring::HopfAlgebra;
use corita::examples::{strictly_upper, sweedler_comodule, sweedler_kxk};
use corita::exactlin::Field;
use corita::morita::standard::projection_context;
use corita::morita::MoritaContext;
use serde_json::{json, Value};
use tempfile::TempDir;

const Q: Field = Field::Rational;

fn corita(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corita")).args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, v: &Value) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, serde_json::to_string_pretty(v).unwrap()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn strictly_upper_file(dir: &TempDir) -> PathBuf {
    let (a, n) = strictly_upper(3);
    write(dir, "r.json", &a.sub(&n, "N").unwrap().to_json())
}

#[test]
fn strictly_upper_ring_is_not_firm() {
    let dir = TempDir::new().unwrap();
    let r = strictly_upper_file(&dir);
    let out_json = dir.path().join("out.json");
    let out = corita(&["check-ring", "--file", s(&r), "--expect", "firm", "--json", s(&out_json)]);
    assert_eq!(out.status.code(), Some(1));
    let report = read_json(&out_json);
    assert_eq!(report["command"], "check-ring");
    assert_eq!(report["report"]["facts"]["idempotent"], false);
    assert_eq!(report["report"]["facts"]["firm"], false);
    assert_eq!(report["expectations"], json!([{ "property": "firm", "holds": false }]));

    // Without the expectation the report itself has nothing failing.
    assert_eq!(corita(&["check-ring", "--file", s(&r)]).status.code(), Some(0));
}

#[test]
fn unknown_property_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let r = strictly_upper_file(&dir);
    assert_eq!(corita(&["check-ring", "--file", s(&r), "--expect", "no-such-thing"]).status.code(), Some(2));
}

#[test]
fn unreadable_and_malformed_files_exit_2() {
    let dir = TempDir::new().unwrap();
    assert_eq!(corita(&["check-ring", "--file", "/nonexistent/r.json"]).status.code(), Some(2));
    let bad = write(&dir, "bad.json", &json!({ "field": "Q", "dim": 2, "mult": [[[1, 0]]] }));
    assert_eq!(corita(&["check-ring", "--file", s(&bad)]).status.code(), Some(2));
    assert_eq!(corita(&["check-ring"]).status.code(), Some(2));
}

#[test]
fn examples_list_has_nine_names() {
    let out = corita(&["examples", "list"]);
    assert!(out.status.success());
    let names: Vec<String> = String::from_utf8(out.stdout).unwrap().lines().map(str::to_string).collect();
    assert_eq!(names.len(), 9);
    assert!(names.iter().any(|n| n == "hopf-z2"));
}

#[test]
fn hopf_example_passes() {
    let dir = TempDir::new().unwrap();
    let out_json = dir.path().join("hopf.json");
    let out = corita(&["examples", "run", "hopf-z2", "--json", s(&out_json)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let report = read_json(&out_json);
    assert_eq!(report["command"], "examples");
    assert_eq!(report["report"]["verdict"], "pass");
}

#[test]
fn unknown_example_exits_2() {
    assert_eq!(corita(&["examples", "run", "nope"]).status.code(), Some(2));
}

#[test]
fn machine_reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        assert!(corita(&["examples", "run", "triangular-core", "--json", s(p)]).status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn reduce_context_emits_a_loadable_context() {
    let dir = TempDir::new().unwrap();
    let ctx = write(&dir, "ctx.json", &projection_context(Q).to_json());
    let out_json = dir.path().join("red.json");
    let out = corita(&["reduce-context", "--file", s(&ctx), "--ideal", "auto", "--json", s(&out_json)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let reduced = MoritaContext::from_json(&read_json(&out_json)["result"]).unwrap();
    assert_eq!(reduced.ap.dim(), 1);
}

#[test]
fn named_ideals_are_resolved() {
    let dir = TempDir::new().unwrap();
    let mut v = projection_context(Q).to_json();
    v["ideals"] = json!({ "first": [[1, 0]] });
    let ctx = write(&dir, "ctx.json", &v);
    let out = corita(&["reduce-context", "--file", s(&ctx), "--ideal", "first"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(corita(&["reduce-context", "--file", s(&ctx), "--ideal", "second"]).status.code(), Some(2));
    assert_eq!(corita(&["kato-ohtake", "--file", s(&ctx), "--ideal", "first"]).status.code(), Some(0));
    assert_eq!(corita(&["check-context", "--file", s(&ctx)]).status.code(), Some(0));
}

#[test]
fn sweedler_coring_commands() {
    let dir = TempDir::new().unwrap();
    let sw = sweedler_kxk(Q).unwrap();
    let sigma = sweedler_comodule(&sw).unwrap();
    let file = write(&dir, "sw.json", &json!({ "coring": sw.coring.to_json(), "sigma": sigma.to_json() }));
    for cmd in ["check-coring", "coseparable"] {
        let out = corita(&[cmd, "--file", s(&file), "--expect", "coseparable"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", String::from_utf8_lossy(&out.stdout));
    }
    for cmd in ["galois", "b-structure"] {
        let out = corita(&[cmd, "--file", s(&file), "--catalog", "dim:2"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn hopf_extension_from_file() {
    let dir = TempDir::new().unwrap();
    let h = HopfAlgebra::cyclic_group(Q, 2);
    let c = corita::coring::hopf_module_coring(&h).unwrap();
    let sigma = corita::coring::hopf_regular_module(&h, &c).unwrap();
    let x = corita::galois::CoringExtension::hopf(&h, &c).unwrap();
    let file = write(
        &dir,
        "ext.json",
        &json!({ "coring": c.to_json(), "sigma": sigma.to_json(), "D": x.d.to_json(), "rho": x.rho.to_json() }),
    );
    let out = corita(&["extension", "--file", s(&file), "--catalog", "dim:2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn bad_catalog_flag_exits_2() {
    assert_eq!(corita(&["examples", "run", "hopf-z2", "--catalog", "huge"]).status.code(), Some(2));
}
