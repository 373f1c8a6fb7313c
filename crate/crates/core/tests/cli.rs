use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modalgebra"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("modalgebra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn without_timing(mut v: serde_json::Value) -> serde_json::Value {
    if let Some(map) = v.as_object_mut() {
        map.remove("wall_time_ms");
    }
    v
}

#[test]
fn parse_echoes_ast_and_print() {
    let out = run(&["parse", "[]p -> [][]p"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "Implies(Box(Var(\"p\")), Box(Box(Var(\"p\"))))\n[]p -> [][]p\n"
    );
    let named = run(&["parse", "F"]);
    assert!(stdout(&named).ends_with("[]p -> [][]p\n"));
}

#[test]
fn check_exit_codes() {
    assert_eq!(
        run(&["check", "--frame", "1;refl", "[]p -> p"])
            .status
            .code(),
        Some(0)
    );
    let fails = run(&["check", "--frame", "1;", "C"]);
    assert_eq!(fails.status.code(), Some(1));
    assert!(stdout(&fails).contains("false at world 0"));
    assert_eq!(run(&["check", "--frame", "x;", "p"]).status.code(), Some(2));
    assert_eq!(
        run(&["check", "--frame", "1;", "p &"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn sweep_json() {
    let out = run(&["sweep", "--kmax", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["frames_examined"], 18);
    assert_eq!(report["counterexamples"].as_array().unwrap().len(), 0);
    let again: serde_json::Value =
        serde_json::from_slice(&run(&["sweep", "--kmax", "2", "--json"]).stdout).unwrap();
    assert_eq!(without_timing(report), without_timing(again));
}

#[test]
fn certificate_round_trip() {
    let cert = scratch("cert.json");
    let report = scratch("report.txt");
    let out = run(&[
        "recession",
        "--depth",
        "24",
        "--samples",
        "40",
        "--quiet",
        "--certificate",
        cert.to_str().unwrap(),
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&report)
        .unwrap()
        .ends_with("PASS\n"));

    let ok = run(&["certify", "--in", cert.to_str().unwrap(), "--json"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    let text = std::fs::read_to_string(&cert).unwrap();
    let mut forged: serde_json::Value = serde_json::from_str(&text).unwrap();
    forged["consequent_value"] = serde_json::Value::String("1;0".into());
    let forged_path = scratch("forged.json");
    std::fs::write(&forged_path, forged.to_string()).unwrap();
    let bad = run(&["certify", "--in", forged_path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("consequent"));
}

#[test]
fn veiled_suite_is_seeded() {
    let a = run(&["veiled", "--samples", "30", "--seed", "5", "--json"]);
    let b = run(&["veiled", "--samples", "30", "--seed", "5", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    let (a, b): (serde_json::Value, serde_json::Value) = (
        serde_json::from_slice(&a.stdout).unwrap(),
        serde_json::from_slice(&b.stdout).unwrap(),
    );
    assert_eq!(without_timing(a), without_timing(b));
}

#[test]
fn eval_in_recession_algebras() {
    let out = run(&["eval", "--assign", "p=ω∖{0}", "[]p & ~[][]p"]);
    assert_eq!(stdout(&out), "{2}\n");
    let out = run(&["eval", "--algebra", "veiled", "--assign", "p=00;100", "p"]);
    assert_eq!(out.status.code(), Some(2));
}
