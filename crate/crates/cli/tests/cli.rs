use std::process::Command;

use jsonschema::JSONSchema;
use serde_json::Value;
use torprod::space::FIXTURES;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_torprod"));
    c.env_remove("TORPROD_SEED");
    c
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn schema() -> JSONSchema {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/schema/report.schema.json"
    ))
    .unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    JSONSchema::compile(&v).unwrap()
}

fn json_report(args: &[&str]) -> (i32, Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let mut full = vec!["--json", path.to_str().unwrap()];
    full.extend_from_slice(args);
    let (code, _, _) = run(&full);
    let v = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    (code, v)
}

fn assert_valid(s: &JSONSchema, v: &Value) {
    if let Err(errors) = s.validate(v) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect();
        panic!("schema violations: {msgs:?}\n{v}");
    }
}

#[test]
fn euler_of_even_pps() {
    let (code, out, _) = run(&["euler", "--family", "PPS", "--m", "2,4", "--np", "6:2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "4");
}

#[test]
fn hvector_of_prism() {
    let (code, out, _) = run(&["hvector", "--polytope", "prism"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 2 2 1");
}

#[test]
fn hypothesis_violation_exits_2() {
    let (code, _, err) = run(&["euler", "--family", "PPS", "--m", "2,2", "--np", "4:2"]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = run(&["cohomology", "--family", "PPS", "--m", "5", "--np", "3:1"]);
    assert_eq!(code, 2);
}

#[test]
fn other_errors_exit_1() {
    let (code, _, _) = run(&["euler", "--fixture", "no-such-fixture"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["euler", "--family", "PPS", "--m", "2", "--np", "banana"]);
    assert_eq!(code, 1);
}

#[test]
fn pontryagin_of_connected_sum() {
    let (code, out, _) = run(&["pontryagin", "--fixture", "cp2-connected-sum"]);
    assert_eq!(code, 0);
    assert!(out.contains("nonzero"), "{out}");
}

#[test]
fn reports_match_schema() {
    let s = schema();
    let commands: Vec<Vec<&str>> = vec![
        vec!["hvector", "--fixture", "pt-2-prism"],
        vec!["cohomology", "--fixture", "pps-3-5-3", "--basis"],
        vec!["cohomology", "--fixture", "dold-2-1", "--ring", "Q"],
        vec!["homology", "--fixture", "dold-1-1"],
        vec!["sw-class", "--fixture", "pps-2-3-1"],
        vec!["pontryagin", "--fixture", "square-r", "--r", "1"],
        vec!["euler", "--fixture", "ps-2-rp2"],
        vec!["span", "--fixture", "pt-3-cp1-cp1"],
        vec![
            "verify-fields",
            "--family",
            "thm63",
            "--m",
            "3",
            "--n",
            "5",
            "--p",
            "3",
            "--trials",
            "10",
        ],
    ];
    for args in commands {
        let (code, v) = json_report(&args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["command"], args[0]);
        assert_valid(&s, &v);
    }
    for name in FIXTURES {
        let (_, v) = json_report(&["all", "--fixture", name, "--trials", "5"]);
        assert_valid(&s, &v);
    }
}

#[test]
fn seed_from_environment() {
    let args = [
        "verify-fields",
        "--family",
        "thm65",
        "--m",
        "3",
        "--l",
        "1",
        "--trials",
        "5",
    ];
    let explicit = bin().args(args).args(["--seed", "42"]).output().unwrap();
    let from_env = bin().args(args).env("TORPROD_SEED", "42").output().unwrap();
    let default = bin().args(args).output().unwrap();
    assert_eq!(explicit.stdout, from_env.stdout);
    assert_ne!(explicit.stdout, default.stdout);
}

#[test]
fn corrupted_family_fails() {
    let (code, out, _) = run(&[
        "verify-fields",
        "--family",
        "thm63-corrupted",
        "--m",
        "3",
        "--n",
        "5",
        "--p",
        "3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("rank: FAIL"), "{out}");
}
