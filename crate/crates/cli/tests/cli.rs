//! End-to-end runs of the `kenmotsu` binary.

use std::process::{Command, Output};

use kenmotsu_core::theorems::THEOREM_IDS;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kenmotsu"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (v, out.status.code().unwrap())
}

fn one_line_diagnostic(out: &Output) -> String {
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    err
}

#[test]
fn star_rb_solve_on_the_example() {
    let (v, code) = json(&[
        "soliton", "--catalog", "kenmotsu-example-5d", "--kind", "star-rb", "--field", "z", "--omega", "1",
        "--format", "json",
    ]);
    assert_eq!(code, 0);
    let s = &v["soliton"];
    assert_eq!(s["Omega"], "24/5");
    assert_eq!(s["classification"], "compressing");
    assert_eq!(s["trace_satisfied"], true);
    assert_eq!(s["residual_is_zero"], false);
}

#[test]
fn star_rb_text_output_names_the_constant() {
    let out = run(&["soliton", "--catalog", "kenmotsu-example-5d", "--kind", "star-rb", "--field", "z", "--omega", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Omega: 24/5"), "{text}");
    assert!(text.contains("classification: compressing"), "{text}");
}

#[test]
fn flat_frame_fails_validation() {
    let (v, code) = json(&["validate", "--catalog", "abelian-flat-3d", "--format", "json"]);
    assert_eq!(code, 1);
    assert_eq!(v["validation"]["is_kenmotsu"], false);
    assert_eq!(v["validation"]["is_almost_contact"], true);
}

#[test]
fn example_validates() {
    let (v, code) = json(&["validate", "--catalog", "kenmotsu-example-5d", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["validation"]["is_kenmotsu"], true);
}

#[test]
fn ricci_json_on_the_example() {
    let (v, code) = json(&["curvature", "--catalog", "kenmotsu-example-5d", "--tensor", "ricci", "--format", "json"]);
    assert_eq!(code, 0);
    let c = &v["curvature"];
    assert_eq!(c["r"], "-20");
    for i in 0..5 {
        for j in 0..5 {
            assert_eq!(c["ricci"][i][j], if i == j { "-4" } else { "0" });
        }
    }
}

#[test]
fn q_tensor_solves_and_accepts_psi() {
    let (v, code) = json(&["curvature", "--catalog", "kenmotsu-example-5d", "--tensor", "q", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["curvature"]["psi"], "-4");
    assert_eq!(v["curvature"]["flat"], true);
    let (v, _) = json(&[
        "curvature", "--catalog", "kenmotsu-example-5d", "--tensor", "q", "--psi", "-3", "--format", "json",
    ]);
    assert_eq!(v["curvature"]["flat"], false);
    assert!(!v["curvature"]["q_nonzero"].as_array().unwrap().is_empty());
}

#[test]
fn riemann_output_flags_the_published_typos() {
    let (v, _) = json(&["curvature", "--catalog", "kenmotsu-example-5d", "--tensor", "riemann", "--format", "json"]);
    let rows = v["curvature"]["published_comparison"].as_array().unwrap();
    let bad: Vec<&str> = rows
        .iter()
        .filter(|r| r["agrees"] == false)
        .map(|r| r["entry"].as_str().unwrap())
        .collect();
    assert_eq!(bad, ["R(e2, e3)e2", "R(e1, e5)e1", "R(e1, e4)e1"]);
}

#[test]
fn verify_mode_exit_codes() {
    let base = ["soliton", "--catalog", "kenmotsu-example-5d", "--field", "xi", "--format", "json"];
    // L_ξ g = 2(g - ηη) = -2S* here, so the left side vanishes and Ω = -ωr*
    let mut a = base.to_vec();
    a.extend(["--kind", "star-rb", "--omega", "1", "--Omega", "4"]);
    let (v, code) = json(&a);
    assert_eq!(v["soliton"]["mode"], "verify");
    assert_eq!(v["soliton"]["residual_is_zero"], true);
    assert_eq!(code, 0);

    let mut b = base.to_vec();
    b.extend(["--kind", "star-rb", "--omega", "1", "--Omega", "5"]);
    let (v, code) = json(&b);
    assert_eq!(v["soliton"]["trace_satisfied"], false);
    assert_eq!(code, 1);
}

#[test]
fn rb_on_the_translation_field_is_exact() {
    // S = -4g and L_z g = 0 for a Killing field, so RB holds exactly
    let (v, code) = json(&[
        "soliton", "--catalog", "kenmotsu-example-5d", "--kind", "rb", "--field", "translation", "--omega", "0",
        "--Omega", "-4", "--format", "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["soliton"]["residual_is_zero"], true);
}

#[test]
fn non_constant_solution_exits_one() {
    let out = run(&[
        "soliton", "--catalog", "kenmotsu-example-5d", "--kind", "star-rb", "--field", "concircular", "--omega", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn every_theorem_id_appears_once() {
    let (v, code) = json(&["theorems", "--catalog", "kenmotsu-example-5d", "--omega", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let ids: Vec<&str> = v["theorems"]["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    for id in THEOREM_IDS {
        assert_eq!(ids.iter().filter(|&&x| x == id).count(), 1, "{id}");
    }
    assert_eq!(ids.len(), THEOREM_IDS.len());
    assert!(v["theorems"]["results"].as_array().unwrap().iter().all(|r| r["status"] == "pass"));
}

#[test]
fn theorems_on_a_non_kenmotsu_frame_are_not_applicable() {
    let (v, code) = json(&["theorems", "--catalog", "abelian-flat-3d", "--omega", "1", "--format", "json"]);
    assert_eq!(code, 0);
    for r in v["theorems"]["results"].as_array().unwrap() {
        assert_eq!(r["status"], "hypothesis-not-met");
    }
}

#[test]
fn report_json_is_deterministic_and_complete() {
    let args = ["report", "--catalog", "kenmotsu-example-5d", "--format", "json"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    for _ in 0..2 {
        assert_eq!(run(&args).stdout, first.stdout);
    }
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    for key in ["tool_version", "manifold", "validation", "curvature", "fields", "solitons", "theorems"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["curvature"]["r_star"], "-4");
    assert_eq!(v["theorems"]["omega"], "0");
}

#[test]
fn manifold_files_are_read_from_disk() {
    let dir = std::env::temp_dir().join(format!("kenmotsu-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    std::fs::write(
        &path,
        r#"{"name": "file-3d", "dimension": 3, "metric": "identity", "xi": 3,
            "phi": [["0","-1","0"],["1","0","0"],["0","0","0"]],
            "structure_constants": [{"i":1,"j":3,"k":1,"value":"1"},{"i":2,"j":3,"k":2,"value":"1"}]}"#,
    )
    .unwrap();
    let (v, code) = json(&["validate", "--manifold", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["manifold"]["name"], "file-3d");

    std::fs::write(&path, r#"{"name": "bad", "dimension": 4}"#).unwrap();
    let err = one_line_diagnostic(&run(&["validate", "--manifold", path.to_str().unwrap()]));
    assert!(err.contains("m.json"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn input_errors_exit_two_with_one_line() {
    let cases: [&[&str]; 8] = [
        &["validate"],
        &["validate", "--catalog", "nope"],
        &["validate", "--manifold", "/nonexistent/m.json"],
        &["frobnicate"],
        &["soliton", "--catalog", "kenmotsu-example-5d", "--kind", "rb", "--field", "w", "--omega", "1"],
        &["soliton", "--catalog", "kenmotsu-example-5d", "--kind", "rb", "--field", "z", "--omega", "x"],
        &["theorems", "--catalog", "kenmotsu-example-5d"],
        &["soliton", "--catalog", "kenmotsu-example-5d", "--kind", "eta-rb", "--field", "z", "--omega", "1", "--Omega", "1"],
    ];
    for args in cases {
        one_line_diagnostic(&run(args));
    }
    let err = one_line_diagnostic(&run(&["validate", "--catalog", "nope"]));
    assert!(err.contains("kenmotsu-example-5d"));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
