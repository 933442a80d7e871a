use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn chalg() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chalg"))
}

fn run(args: &[&str]) -> Output {
    chalg().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = chalg()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn element(dir: &Path, name: &str, algebra: &str, basis: &str, terms: &[(&str, &str)]) -> PathBuf {
    let terms: Vec<Value> = terms
        .iter()
        .map(|(c, k)| json!({"coeff": c, "key": k}))
        .collect();
    let path = dir.join(name);
    std::fs::write(
        &path,
        json!({"algebra": algebra, "basis": basis, "terms": terms}).to_string(),
    )
    .unwrap();
    path
}

fn terms(o: &Output) -> Vec<Value> {
    let v: Value = serde_json::from_str(&stdout(o)).unwrap();
    v["terms"].as_array().unwrap().clone()
}

#[test]
fn dims_of_ordered_forests() {
    let o = run(&["dims", "--algebra", "ho", "--max-degree", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 1 3 16 125\n");
    let o = run(&["dims", "--algebra", "efsym", "--max-degree", "3"]);
    assert_eq!(stdout(&o), "1 1 4 27\n");
}

#[test]
fn ck_coproduct_of_tquatredeux() {
    let dir = tempfile::tempdir().unwrap();
    let x = element(dir.path(), "x.json", "CK", "S", &[("1", "tquatredeux")]);
    let o = run(&["coproduct", "--algebra", "ck", x.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let t = terms(&o);
    assert_eq!(t.len(), 7);
    assert!(t.contains(&json!({"coeff": "1", "left": "(())", "right": "() ()"})));
    assert!(t.contains(&json!({"coeff": "1", "left": "()", "right": "(()) ()"})));
}

#[test]
fn r_product_of_ordered_forests() {
    let dir = tempfile::tempdir().unwrap();
    let x = element(dir.path(), "x.json", "Ho", "R", &[("1", "0 0")]);
    let y = element(dir.path(), "y.json", "Ho", "R", &[("1", "0")]);
    let o = run(&[
        "product",
        "--algebra",
        "ho",
        "--basis",
        "R",
        x.to_str().unwrap(),
        y.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(terms(&o).len(), 8);
    let o = run(&[
        "product",
        "--algebra",
        "ho",
        "--basis",
        "S",
        x.to_str().unwrap(),
        y.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2), "basis mismatch is a usage error");
}

#[test]
fn basis_change_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let x = element(
        dir.path(),
        "x.json",
        "EFSym",
        "S",
        &[("2", "(12)"), ("-1", "(21)")],
    );
    let r = dir.path().join("r.json");
    let o = run(&[
        "basis-change",
        "--from",
        "S",
        "--to",
        "R",
        "--algebra",
        "efsym",
        x.to_str().unwrap(),
        "-o",
        r.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = run(&[
        "basis-change",
        "--from",
        "R",
        "--to",
        "S",
        "--algebra",
        "efsym",
        r.to_str().unwrap(),
    ]);
    let t = terms(&o);
    assert_eq!(
        t,
        [
            json!({"coeff": "2", "key": "1 2"}),
            json!({"coeff": "-1", "key": "2 1"})
        ]
    );
}

#[test]
fn projection_reads_stdin() {
    let input =
        json!({"algebra": "Ho", "basis": "S", "terms": [{"coeff": "1", "key": "0 0"}]}).to_string();
    let o = run_stdin(&["morphism", "--map", "pi", "-"], &input);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["algebra"], "WQSym");
    assert_eq!(v["basis"], "M");
    assert_eq!(terms(&o).len(), 3);
    let o = run_stdin(&["morphism", "--map", "f_F", "-"], &input);
    assert_eq!(terms(&o), [json!({"coeff": "1", "key": "1 2"})]);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "realize",
        "--version",
        "v1",
        "--indices",
        "4",
        "--object",
        "0 1 1",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["version"], "V1");
    assert_eq!(v["N"], 4);
}

#[test]
fn latex_output() {
    let o = run(&[
        "--format",
        "latex",
        "realize",
        "--version",
        "func",
        "--indices",
        "2",
        "--object",
        "(21)",
    ]);
    assert_eq!(stdout(&o), "a_{1,2} a_{2,1} + a_{2,1} a_{1,2}\n");
    let dir = tempfile::tempdir().unwrap();
    let x = element(dir.path(), "x.json", "Ho", "S", &[("-3", "0 1"), ("1", "")]);
    let o = run(&[
        "morphism",
        "--map",
        "ck",
        x.to_str().unwrap(),
        "--format",
        "latex",
    ]);
    assert_eq!(stdout(&o), "1 - 3 \\mathbf{S}^{(0,1)}\n");
}

#[test]
fn config_sets_bound_and_indices() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("chalg.toml");
    std::fs::write(&cfg, "bound = 2\nindices = 2\n").unwrap();
    let c = cfg.to_str().unwrap();
    let o = run(&[
        "--config",
        c,
        "dims",
        "--algebra",
        "ho",
        "--max-degree",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bound"), "{}", stderr(&o));
    let o = run(&["--config", c, "realize", "--version", "v2", "--object", "0"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["N"], 2);
    std::fs::write(&cfg, "colour = 1\n").unwrap();
    assert_eq!(
        run(&[
            "--config",
            c,
            "dims",
            "--algebra",
            "ho",
            "--max-degree",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["dims", "--algebra", "nope", "--max-degree", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&["realize", "--version", "v1", "--object", "0 x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("byte 2"), "{}", stderr(&o));
    let dir = tempfile::tempdir().unwrap();
    let x = element(dir.path(), "x.json", "CK", "S", &[("1", "()")]);
    assert_eq!(
        run(&["coproduct", "--algebra", "ho", x.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_small_suite_passes() {
    let o = run(&["verify", "--suite", "coassoc", "--max-degree", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("6 of 6 checks passed\n"));
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify", "--suite", "all", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
