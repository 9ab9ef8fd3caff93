use std::process::{Command, Output};

use glmix::reps::{build_gl_np1, RepSpec};
use glmix::MatrixDiffOp;
use glmix_cli::dto::OperatorDto;
use serde_json::Value;

fn glmix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glmix")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json manifest")
}

#[test]
fn check_d2_passes() {
    let out = glmix(&["check", "--n", "2", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let m = json(&out);
    assert_eq!(m["schema_version"], 1);
    assert_eq!(m["verdict"], "pass");
    let ids: Vec<&Value> = m["results"].as_array().unwrap().iter().filter_map(|r| r.get("identity")).collect();
    assert_eq!(ids.len(), 81);
    assert!(ids.iter().all(|r| r["pass"] == true));
}

#[test]
fn scalar_calogero_spectrum() {
    let out = glmix(&["spectrum", "--model", "calogero", "--k", "2", "--d", "1", "--omega", "1", "--nu", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let m = json(&out);
    let values: Vec<&str> = m["results"][0]["values"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(values, ["0", "-4", "-6", "-8", "-10", "-12"]);
}

#[test]
fn hexagon_space_text() {
    let out = glmix(&["space", "--k", "4", "--d", "2", "--output", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dim = 24"), "{text}");
    assert!(text.contains("hexagon audit: pass"));
}

#[test]
fn output_is_deterministic() {
    let args = ["relations", "--d", "1,2"];
    let a = glmix(&args);
    let b = glmix(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(glmix(&["gens", "--n", "3", "--d", "2"]).status.code(), Some(2));
    assert_eq!(glmix(&["gens", "--bogus"]).status.code(), Some(2));
    assert_eq!(glmix(&["spectrum", "--model", "calogero", "--k", "1"]).status.code(), Some(2));
    assert_eq!(glmix(&["space", "--k", "0", "--d", "2"]).status.code(), Some(2));
}

#[test]
fn identity_failure_exits_one_with_manifest() {
    let out = glmix(&["model", "--model", "sutherland", "--form", "matrix", "--d", "1", "--check"]);
    assert_eq!(out.status.code(), Some(1));
    let m = json(&out);
    assert_eq!(m["verdict"], "fail");
    assert!(m["results"][1]["identity"]["residual"].as_str().unwrap().contains("x2*d2"));
}

#[test]
fn thread_cap() {
    let ok = Command::new(env!("CARGO_BIN_EXE_glmix")).env("GLMIX_THREADS", "1").args(["check", "--d", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_glmix")).env("GLMIX_THREADS", "many").args(["check"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gens.tex");
    let out = glmix(&["gens", "--d", "2", "--output", "latex", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let tex = std::fs::read_to_string(&path).unwrap();
    assert!(tex.contains("\\begin{pmatrix}"));
    assert!(tex.contains("T_1^+"));
}

#[test]
fn generators_round_trip_through_json() {
    let out = glmix(&["gens", "--d", "3"]);
    let m = json(&out);
    let g = build_gl_np1(&RepSpec::gl3(3).unwrap());
    for (r, (name, op)) in m["results"].as_array().unwrap().iter().zip(g.iter()) {
        assert_eq!(r["name"], name.to_string());
        let dto: OperatorDto = serde_json::from_value(r["operator"].clone()).unwrap();
        assert_eq!(&MatrixDiffOp::try_from(&dto).unwrap(), op);
    }
}

#[test]
fn casimir_values_for_d3() {
    let m = json(&glmix(&["casimir", "--d", "3", "--output", "json"]));
    assert_eq!(m["verdict"], "pass");
    assert_eq!(m["results"][0]["name"], "C1");
    assert!(m["results"][0].get("scalar").is_some());
}
