//! End-to-end checks of the `graded-morita` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graded-morita")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("graded-morita-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn emit(id: &str, extra: &[&str]) -> PathBuf {
    let path = scratch(&format!("{id}{}.json", extra.join("")));
    let p = path.to_str().unwrap();
    let mut args = extra.to_vec();
    args.extend(["fixtures", "emit", id, "-o", p]);
    let out = bin(&args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn code(args: &[&str]) -> i32 {
    bin(args).status.code().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_duality_on_emitted_fixture_passes() {
    let f1 = emit("F1", &[]);
    let out = bin(&["verify", "duality", s(&f1)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains(": pass"));
}

#[test]
fn sg_rejects_non_psg_algebra_with_usage_code() {
    let f2 = emit("F2", &[]);
    let out = bin(&["verify", "sg", s(&f2)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not partially strongly graded"));
}

#[test]
fn globalization_rejects_non_minimal_restriction() {
    let pad = emit("K3PAD", &[]);
    assert_eq!(code(&["verify", "globalization", s(&pad)]), 2);
    let f3 = emit("F3", &[]);
    assert_eq!(code(&["verify", "globalization", s(&f3)]), 0);
}

#[test]
fn constructions_emit_valid_documents() {
    let f1 = emit("F1", &[]);
    let f3 = emit("F3", &[]);
    let ctx = emit("gen-context", &["--seed", "3"]);
    let cases = [
        ("smash", &f1),
        ("fmat", &f1),
        ("partial-smash", &f1),
        ("dual-action", &f1),
        ("duality", &f1),
        ("skew", &f3),
        ("linking", &ctx),
    ];
    for (what, input) in cases {
        let out = scratch(&format!("construct-{what}.json"));
        let run = bin(&["construct", what, s(input), "-o", s(&out)]);
        assert_eq!(run.status.code(), Some(0), "{what}: {}", String::from_utf8_lossy(&run.stderr));
        assert_eq!(code(&["validate", s(&out)]), 0, "{what} output does not validate");
    }
}

#[test]
fn construct_on_wrong_object_kind_is_usage_error() {
    let f3 = emit("F3", &[]);
    let out = scratch("wrong-kind.json");
    assert_eq!(code(&["construct", "smash", s(&f3), "-o", s(&out)]), 2);
}

#[test]
fn emitted_fixtures_round_trip_through_validate() {
    let list = bin(&["fixtures", "list"]);
    assert_eq!(list.status.code(), Some(0));
    let text = String::from_utf8(list.stdout).unwrap();
    for id in ["F1", "F2", "F3", "F4", "F5", "F6", "K3PAD", "SF3", "SF6"] {
        assert!(text.contains(id), "fixture list lacks {id}");
        let path = emit(id, &[]);
        assert_eq!(code(&["validate", s(&path)]), 0, "{id}");
        let first = std::fs::read(&path).unwrap();
        let rerun = emit(id, &[]);
        assert_eq!(first, std::fs::read(rerun).unwrap(), "{id} emission is not deterministic");
    }
}

#[test]
fn field_override_changes_emitted_field() {
    let path = emit("F1", &["--field", "fp:7"]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("fp:7"));
    assert_eq!(code(&["validate", s(&path)]), 0);
    assert_eq!(code(&["--field", "fp:4", "validate", s(&path)]), 2);
}

#[test]
fn malformed_documents_exit_two() {
    let broken = scratch("broken.json");
    std::fs::write(&broken, "{\n  \"format_version\": \"1\",\n  \"field\": \n").unwrap();
    let out = bin(&["validate", s(&broken)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error at line"));

    let f1 = emit("F1", &[]);
    let text = std::fs::read_to_string(&f1).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let obj = doc["objects"].as_array_mut().unwrap().iter_mut().find(|o| o["kind"] == "algebra").unwrap();
    obj["dim"] = serde_json::json!(obj["dim"].as_u64().unwrap() + 1);
    let bad = scratch("bad-dim.json");
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = bin(&["validate", s(&bad)]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn unknown_fixture_and_bad_usage_exit_two() {
    assert_eq!(code(&["fixtures", "emit", "NOPE"]), 2);
    assert_eq!(code(&["verify", "nonsense", "x.json"]), 2);
}

#[test]
fn machine_report_is_json() {
    let f1 = emit("F1", &[]);
    let out = bin(&["--report", "machine", "verify", "geq", s(&f1)]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.is_object() || v.is_array());
}
