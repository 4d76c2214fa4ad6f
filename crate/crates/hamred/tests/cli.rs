//! Black-box tests of the command-line binary: exit codes, determinism of
//! the JSON reports, and handling of malformed input.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hamred"))
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("hamred-test-{}-{name}", std::process::id()));
    p
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process exited normally")
}

#[test]
fn verify_theorem_h_passes() {
    let out = bin().args(["verify", "theorem-h"]).output().unwrap();
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("spin3-minus: PASS"));
    assert!(stdout.contains("spin3-plus: PASS"));
    assert!(stdout.contains("spin3-normalization: PASS"));
}

#[test]
fn verify_rejects_unknown_target() {
    let out = bin().args(["verify", "theorem-nope"]).output().unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn usage_error_exits_2() {
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_json_is_deterministic_outside_timings() {
    let strip = |path: &PathBuf| -> String {
        let mut v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("timings");
        serde_json::to_string(&v).unwrap()
    };
    let a = temp_path("det-a.json");
    let b = temp_path("det-b.json");
    for path in [&a, &b] {
        let out = bin()
            .args(["verify", "classical-limit", "--fuzz", "40"])
            .arg("--json")
            .arg(path)
            .env("HAMRED_SEED", "12345")
            .output()
            .unwrap();
        assert_eq!(code(&out), 0);
    }
    assert_eq!(strip(&a), strip(&b));
    std::fs::remove_file(&a).ok();
    std::fs::remove_file(&b).ok();
}

#[test]
fn reduce_custom_trivial_action_is_whole_algebra() {
    let action = temp_path("trivial.json");
    std::fs::write(
        &action,
        r#"{"name": "trivial", "n": 3, "signature": [-1, -1, -1], "generators": []}"#,
    )
    .unwrap();
    let report = temp_path("trivial-report.json");
    let out = bin()
        .arg("reduce")
        .arg(&action)
        .arg("--json")
        .arg(&report)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["dims"]["quotient_even"], 4);
    assert_eq!(v["dims"]["quotient_odd"], 4);
    assert_eq!(v["dims"]["ideal"], 0);
    assert_eq!(v["reduction"]["quotient"]["dim"], 8);
    std::fs::remove_file(&action).ok();
    std::fs::remove_file(&report).ok();
}

#[test]
fn reduce_reports_g2_dimensions() {
    let report = temp_path("g2-report.json");
    let out = bin()
        .args(["reduce", "g2", "--json"])
        .arg(&report)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["dims"]["ideal"], 112);
    assert_eq!(v["identification"]["tag"], "Cliff(-1)");
    std::fs::remove_file(&report).ok();
}

#[test]
fn reduce_rejects_missing_and_malformed_input() {
    let out = bin()
        .args(["reduce", "/nonexistent/action.json"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);

    let bad = temp_path("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = bin().arg("reduce").arg(&bad).output().unwrap();
    assert_eq!(code(&out), 2);
    std::fs::remove_file(&bad).ok();

    let bad_sig = temp_path("bad-sig.json");
    std::fs::write(
        &bad_sig,
        r#"{"name": "x", "signature": [-1, 5], "generators": []}"#,
    )
    .unwrap();
    let out = bin().arg("reduce").arg(&bad_sig).output().unwrap();
    assert_eq!(code(&out), 2);
    std::fs::remove_file(&bad_sig).ok();
}

#[test]
fn identify_reads_structure_constants() {
    // Cliff(-1): basis {1, t}, t odd, t^2 = 1
    let file = temp_path("cliffminus.json");
    std::fs::write(
        &file,
        r#"{
            "dim": 2,
            "parities": ["even", "odd"],
            "unit": ["1", "0"],
            "structure_constants": [
                [["1", "0"], ["0", "1"]],
                [["0", "1"], ["1", "0"]]
            ]
        }"#,
    )
    .unwrap();
    let out = bin().arg("identify").arg(&file).output().unwrap();
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("tag: Cliff(-1)"), "stdout: {stdout}");
    std::fs::remove_file(&file).ok();
}

#[test]
fn identify_rejects_malformed_input() {
    let file = temp_path("malformed-algebra.json");
    std::fs::write(&file, r#"{"dim": 2, "parities": ["sideways"]}"#).unwrap();
    let out = bin().arg("identify").arg(&file).output().unwrap();
    assert_eq!(code(&out), 2);
    std::fs::remove_file(&file).ok();
}

#[test]
fn catalog_list_names_every_entry() {
    let out = bin().args(["catalog", "list"]).output().unwrap();
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    for name in [
        "spin3-minus",
        "spin3-plus",
        "g2",
        "spin7",
        "spin8",
        "lagrangian",
        "classical-spin3",
    ] {
        assert!(stdout.contains(name), "missing {name} in: {stdout}");
    }
}
