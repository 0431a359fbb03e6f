//! The `weld` binary: exit codes, JSON shape and determinism.

use std::process::Command;

use serde_json::Value;
use weld::codec::GaussCode;

const TREFOIL: &str = "O1+U2+O3+U1+O2+U3+";

fn weld(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_weld")).args(args).output().expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).expect("utf-8"))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let (code, out) = weld(&a);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

#[test]
fn invariants_report() {
    let (code, v) = json(&["invariants", TREFOIL, "--level", "welded"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "weld-report/1");
    assert_eq!(v["command"], "invariants");
    assert_eq!(v["palette_version"], "1");
    assert_eq!(v["results"]["entries"]["alexander"], serde_json::json!([[0, 1], [1, -1], [2, 1]]));
    assert!(v.get("timing_ms").is_none());
    // echoed input reproduces the canonical form
    let echoed = GaussCode::parse(v["inputs"][0].as_str().unwrap()).unwrap();
    assert_eq!(echoed.canonical(), GaussCode::parse(TREFOIL).unwrap().canonical());
}

#[test]
fn custom_palette() {
    let (code, v) = json(&["invariants", TREFOIL, "--level", "tube", "--groups", "S3,Z5", "--quandles", "R3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["entries"]["hom_counts"]["S3"], 12);
    assert_eq!(v["results"]["entries"]["quandle_counts"]["R3"], 9);
    assert_eq!(v["results"]["palette"]["groups"], serde_json::json!(["S3", "Z5"]));
    assert_eq!(weld(&["invariants", TREFOIL, "--groups", "Q8"]).0, 2);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["invariants", TREFOIL, "--level", "virtual", "--json"];
    assert_eq!(weld(&args), weld(&args));
    let args = ["search", "O1+U2+O3+U1+O2+U3+O4-U4-", TREFOIL, "--depth", "1", "--json"];
    assert_eq!(weld(&args), weld(&args));
}

#[test]
fn compare_exit_codes() {
    let t = GaussCode::parse(TREFOIL).unwrap();
    let partner = t.reverse_vreflect().to_string();
    let (code, v) = json(&["compare", TREFOIL, &partner, "--level", "tube"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["verdict"]["outcome"], "NotDistinguished");
    let (code, v) = json(&["compare", TREFOIL, &partner, "--level", "welded", "--classical"]);
    assert_eq!(code, 3);
    assert_eq!(v["results"]["verdict"]["outcome"], "DistinguishedClassically");
    assert_eq!(v["results"]["verdict"]["witness"], "f_polynomial");
    let (code, v) = json(&["compare", TREFOIL, "O1+U2-O4-U1+O3+U4-O2-U3+", "--level", "welded"]);
    assert_eq!(code, 3);
    assert_eq!(v["results"]["verdict"]["witness"], "alexander");
}

#[test]
fn validation_errors() {
    let (code, out) = weld(&["validate", "O1+U2+"]);
    assert_eq!(code, 2);
    assert!(out.contains("StructureError"), "{out}");
    let (code, v) = json(&["validate", "O1+U1-"]);
    assert_eq!(code, 2);
    assert_eq!(v["results"]["error"]["kind"], "StructureError");
    assert!(v["results"]["error"]["message"].as_str().unwrap().contains("sign mismatch on crossing 1"));
    let (code, v) = json(&["validate", "O1+X2"]);
    assert_eq!(code, 2);
    assert_eq!(v["results"]["error"]["kind"], "SyntaxError");
    assert_eq!(weld(&["compare", TREFOIL]).0, 2);
    assert_eq!(weld(&["validate", ""]).0, 0);
}

#[test]
fn symmetry_subcommand() {
    let (code, out) = weld(&["symmetry", TREFOIL, "--op", "mirror"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "U1-O2-U3-O1-U2-O3-");
}

#[test]
fn search_exit_codes() {
    let (code, v) = json(&["search", "O1+U2+O3+U1+O2+U3+O4-U4-", TREFOIL, "--depth", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["outcome"], "Found");
    assert_eq!(v["results"]["path"]["steps"].as_array().unwrap().len(), 1);
    let (code, v) = json(&["search", TREFOIL, "O1+U2-O4-U1+O3+U4-O2-U3+", "--depth", "2", "--max-states", "2000"]);
    assert_eq!(code, 3);
    assert_eq!(v["results"]["outcome"], "NotFound");
}

#[test]
fn corpus_verify_and_demo() {
    let (code, v) = json(&["corpus", "verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["all_ok"], true);
    let (code, out) = weld(&["thm8-demo"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("Tube certificates equal:             yes"));
    let (code, v) = json(&["thm8-demo"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["holds"], true);
}

#[test]
fn timing_is_opt_in() {
    let (_, v) = json(&["validate", TREFOIL, "--timing"]);
    assert!(v["timing_ms"].is_u64());
}
