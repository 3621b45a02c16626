use std::process::{Command, Output};

use serde_json::Value;

fn conway(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conway"))
        .args(args)
        .env_remove("GROUPOID_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn plane_groupoid_order() {
    let out = conway(&["--json", "groupoid", "compute", "pg23"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"][1], "groupoid");
    assert_eq!(v["results"]["hole_stabilizer_order"], "95040");
    assert_eq!(v["results"]["groupoid_size"], "1235520");
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert!(v["versions"]["conway_core"].is_string());
}

#[test]
fn catalog_lists_the_families() {
    let out = conway(&["--json", "catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let families = v["results"]["families"].as_array().unwrap();
    assert!(families.len() >= 7, "{families:?}");
}

#[test]
fn design_round_trips_through_a_file() {
    let dir = std::env::temp_dir().join(format!("conway-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pg23.json");
    let path = path.to_str().unwrap();
    assert_eq!(conway(&["design", "build", "pg23", "--out", path]).status.code(), Some(0));
    let from_file = json(&conway(&["--json", "groupoid", "compute", path]));
    let named = json(&conway(&["--json", "groupoid", "compute", "pg23"]));
    assert_eq!(from_file["results"], named["results"]);
    assert_eq!(from_file["inputs"][0]["sha256"], named["inputs"][0]["sha256"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let bad = conway(&["groupoid", "compute", "no-such-design"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    assert_eq!(conway(&["not-a-command"]).status.code(), Some(2));

    let over = Command::new(env!("CARGO_BIN_EXE_conway"))
        .args(["--json", "code", "analyze", "pg23", "--field", "3"])
        .env("GROUPOID_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(over.status.code(), Some(3));
    assert_eq!(json(&over)["status"], "budget-exceeded");
}

#[test]
fn reports_are_byte_stable() {
    let a = conway(&["--json", "m13", "signed"]);
    let b = conway(&["--json", "m13", "signed"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn single_criterion() {
    let out = conway(&["--json", "verify-all", "--criterion", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "ok");
}
