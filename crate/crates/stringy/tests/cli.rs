use std::process::{Command, Output};

use serde_json::Value;

fn stringy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stringy"))
        .args(args)
        .env_remove("STRINGY_COLOR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = stringy(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn estr_text() {
    assert_eq!(
        stdout(&["estr", "--r", "3", "--n", "2", "--ell", "3", "--format", "text"]),
        "E_str = u^3*v^3 + 7*u^2*v^2 + u*v\ne_str = 9\nind_str = 1\n"
    );
}

#[test]
fn estr_methods_agree() {
    for (r, n, ell) in [("3", "2", "2"), ("4", "6", "3"), ("5", "7", "4"), ("3", "1", "2")] {
        let args = |m| ["estr", "--r", r, "--n", n, "--ell", ell, "--method", m];
        let both = stdout(&args("both"));
        assert_eq!(both, stdout(&args("assembled")));
        let tail = |s: &str| s.lines().skip(1).collect::<Vec<_>>().join("\n");
        assert_eq!(tail(&both), tail(&stdout(&args("closed"))));
    }
}

#[test]
fn estr_json_schema() {
    let v: Value = serde_json::from_str(&stdout(&["estr", "--r", "3", "--n", "2", "--ell", "2", "--format", "json"])).unwrap();
    assert_eq!(v["e_str"], serde_json::json!({"num": "7", "den": "5"}));
    assert_eq!(v["ind_str"], 5);
    assert!(v["E_str"]["expression"]["terms"].as_array().unwrap().iter().all(|t| t["denominator_factors"].is_array()));
}

#[test]
fn complete_intersection_example() {
    let out = stdout(&["ci", "--N", "4", "--degrees", "5", "--sing", "2,3:9"]);
    assert!(out.lines().any(|l| l == "e_str = 16"), "{out}");
}

#[test]
fn segre_knorrer_table_flags_the_misprint() {
    let out = stdout(&["table", "segre-knorrer", "--format", "csv"]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows[3].starts_with("7,96/13,") && rows[3].contains("paper_discrepancy"));
    assert_eq!(rows.iter().filter(|r| r.contains("paper_discrepancy")).count(), 1);
}

#[test]
fn golden_tables() {
    for (args, file) in [
        (&["table", "conjrem", "--r", "3", "--n-max", "20"][..], "conjrem_r3_n20.csv"),
        (&["table", "solids"][..], "solids.csv"),
        (&["table", "segre-knorrer"][..], "segre_knorrer.csv"),
    ] {
        let mut args = args.to_vec();
        args.extend(["--format", "csv"]);
        assert_eq!(stdout(&args), golden(file), "{file}");
    }
}

#[test]
fn table_json_shape() {
    let v: Value = serde_json::from_str(&stdout(&["table", "solids", "--format", "json"])).unwrap();
    assert_eq!(v["columns"][0], "solid");
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    assert_eq!(v["rows"][2][5], serde_json::json!({"num": "-4212", "den": "1"}));
    assert_eq!(v["rows"][2][3], 6);
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "goryunov", "--N", "5", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(stringy(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(stringy(&["estr", "--r", "3", "--n", "2", "--ell", "3", "--bogus"]).status.code(), Some(2));
    assert_eq!(stringy(&["fermat", "--ell", "3", "--dim", "2", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(stringy(&["--help"]).status.code(), Some(0));

    let out = stringy(&["estr", "--r", "5", "--n", "5", "--ell", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("divides neither"));
    assert!(out.stdout.is_empty());

    assert_eq!(stringy(&["segre-knorrer", "--n", "3"]).status.code(), Some(1));
    assert_eq!(stringy(&["ci", "--N", "4", "--degrees", "5", "--sing", "2,5"]).status.code(), Some(1));
    assert_eq!(stringy(&["ci", "--N", "4", "--degrees", "5", "--sing", "2;3"]).status.code(), Some(2));
}

#[test]
fn color_is_opt_in() {
    let plain = stdout(&["fermat", "--ell", "4", "--dim", "1"]);
    assert_eq!(plain, "E = u*v - 3*u - 3*v + 1\ne = -4\n");
    let out = Command::new(env!("CARGO_BIN_EXE_stringy"))
        .args(["fermat", "--ell", "4", "--dim", "1"])
        .env("STRINGY_COLOR", "1")
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains('\x1b'));
}
