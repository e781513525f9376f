use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hirano"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().expect("spawn");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("wait")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// (golden file, arguments, expected exit code)
const CASES: &[(&str, &[&str], i32)] = &[
    ("hirano_mixed_z2.json", &["hirano", r#"{"ring":{"kind":"Zp_local","p":2},"matrix":[[5,6],[3,2]]}"#], 0),
    ("hirano_unsolvable_z2.json", &["hirano", r#"{"ring":{"kind":"Zp_local","p":2},"matrix":[[1,2],[3,4]]}"#], 2),
    ("classify_mixed_z2.json", &["classify", "--ring", "Zp_local:2", r#"{"matrix":[[5,6],[3,2]]}"#], 0),
    ("classify_integer.json", &["classify", r#"{"ring":"Z","matrix":[[1,1],[0,1]]}"#], 0),
    ("hirano_z6_identity.json", &["hirano", r#"{"ring":{"kind":"Zn","n":6},"matrix":[[1,0],[0,1]]}"#], 0),
    ("drazin_q.json", &["drazin", r#"{"ring":"Q","matrix":[[2,0],[0,0]]}"#], 0),
    ("verify_drazin_only.json", &["verify", r#"{"ring":"Q","matrix":[[2,0],[0,0]],"matrix2":[["1/2",0],[0,0]]}"#], 0),
    ("verify_identity.json", &["verify", r#"{"ring":"Q","matrix":[[1,0],[0,1]],"matrix2":[[1,0],[0,1]]}"#], 0),
    ("cline_classic.json", &["cline", r#"{"ring":"Q","matrix":[[1,0],[0,0]],"matrix2":[[1,1],[0,0]]}"#], 0),
    ("sum_thm53.json", &["sum", "--mode", "thm53", r#"{"ring":"Q","matrix":[[0,1],[0,0]],"matrix2":[[1,0],[0,0]]}"#], 0),
    ("sum_cor55.json", &["sum", "--mode", "cor55", r#"{"ring":"Q","matrix":[[1,0],[0,0]],"matrix2":[[0,0],[0,-1]]}"#], 0),
    ("tripotent_none.json", &["tripotent", r#"{"ring":"Q","matrix":[[2,0],[0,0]]}"#], 2),
    ("tripotent_jordan.json", &["tripotent", r#"{"ring":"Q","matrix":[[1,1],[0,1]]}"#], 0),
    ("oracle_z30.json", &["oracle", "--ring", "Zn:30", "--property", "thm2.5"], 0),
];

#[test]
fn golden_outputs() {
    let mut wrong = Vec::new();
    for (file, args, code) in CASES {
        let o = run(args);
        assert_eq!(o.status.code(), Some(*code), "{file}: {}", String::from_utf8_lossy(&o.stderr));
        let want = std::fs::read_to_string(golden(file)).unwrap_or_else(|e| panic!("{file}: {e}"));
        if String::from_utf8_lossy(&o.stdout) != want {
            wrong.push(*file);
        }
    }
    assert!(wrong.is_empty(), "output differs from golden: {wrong:?}");
}

#[test]
fn output_is_deterministic() {
    let args = ["hirano", r#"{"ring":"Zp_local:2","matrix":[[5,6],[3,2]]}"#];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn hirano_then_verify_round_trip() {
    for (ring, m) in [
        (r#""Zp_local:2""#, "[[5,6],[3,2]]"),
        (r#""Q""#, "[[1,1,0],[0,1,0],[0,0,0]]"),
        (r#""Zn:12""#, "[[3,1],[0,4]]"),
        (r#""Z""#, "[[0,1],[0,0]]"),
    ] {
        let o = run(&["hirano", &format!(r#"{{"ring":{ring},"matrix":{m}}}"#)]);
        assert_eq!(o.status.code(), Some(0), "{m}");
        let h = stdout_json(&o)["h"].clone();
        let doc = format!(r#"{{"ring":{ring},"matrix":{m},"matrix2":{h}}}"#);
        let v = stdout_json(&run_stdin(&["verify"], &doc));
        assert_eq!(v["is_hirano"], Value::Bool(true), "{m}");
    }
}

#[test]
fn input_sources_agree() {
    let doc = r#"{"ring":{"kind":"Q"},"matrix":[[1,2],[2,4]]}"#;
    let path = std::env::temp_dir().join(format!("hirano-cli-{}.json", std::process::id()));
    std::fs::write(&path, doc).unwrap();
    let inline = run(&["drazin", doc]);
    let file = run(&["drazin", path.to_str().unwrap()]);
    let stdin = run_stdin(&["drazin"], doc);
    let dash = run_stdin(&["drazin", "-"], doc);
    std::fs::remove_file(&path).ok();
    assert_eq!(inline.status.code(), Some(0));
    for o in [&file, &stdin, &dash] {
        assert_eq!(o.stdout, inline.stdout);
    }
}

#[test]
fn ring_flag_overrides_document() {
    let o = run(&["hirano", "--ring", r#"{"kind":"Zn","n":5}"#, r#"{"ring":"Q","matrix":[[4]]}"#]);
    let v = stdout_json(&o);
    assert_eq!(v["ring"]["kind"], "Zn");
    assert_eq!(v["h"], serde_json::json!([[4]]));
}

#[test]
fn errors_exit_one_with_json() {
    for args in [
        vec!["hirano", r#"{"ring":"Q","matrix":[[1,2],[3"#],
        vec!["hirano", r#"{"matrix":[[1]]}"#],
        vec!["hirano", r#"{"ring":"Q","matrix":[[1,2],[3]]}"#],
        vec!["hirano", "/nonexistent/input.json"],
        vec!["sum", "--mode", "cor54", r#"{"ring":"Q","matrix":[[1,0],[0,1]],"matrix2":[[1,0],[0,1]]}"#],
        vec!["drazin", r#"{"ring":"Zn:4","matrix":[[2]]}"#],
        vec!["oracle", "--ring", "Zn:30", "--property", "nope"],
        vec!["oracle", "--ring", "Zn:30", "--dim", "3", "--property", "thm2.5"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        let e: Value = serde_json::from_slice(&o.stderr).unwrap_or_else(|_| panic!("{args:?}: {}", String::from_utf8_lossy(&o.stderr)));
        assert!(e["error"].is_string() && e["message"].is_string(), "{args:?}");
    }
    let e: Value = serde_json::from_slice(&run(&["hirano", "{"]).stderr).unwrap();
    assert_eq!(e["error"], "malformed-json");
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("oracle"));
}
