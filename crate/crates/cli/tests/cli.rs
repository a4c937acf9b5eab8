use std::path::{Path, PathBuf};
use std::process::Command;

use hompoisson_cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("hompoisson").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

const BROKEN_BRACKET: &str = r#"{"format": 1, "kind": "hom-poisson", "dim": 2, "commutative": true,
  "mu": [], "bracket": [[0, 1, 1, "1"]]}"#;

#[test]
fn commutator_of_matrix_algebra_passes_check() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.json");
    let c = dir.path().join("c.json");
    assert_eq!(
        cli(&["catalog", "matrix", "--param", "n=2", "-o", path_str(&m)]).code,
        EXIT_PASS
    );
    assert_eq!(
        cli(&["commutator", path_str(&m), "-o", path_str(&c)]).code,
        EXIT_PASS
    );
    let r = cli(&["check", path_str(&c)]);
    assert_eq!(r.code, EXIT_PASS, "{}{}", r.out, r.err);
    assert!(r.out.starts_with("PASS hom-poisson"));
}

#[test]
fn free_poly_witness_prints_residual() {
    let r = cli(&["witness", "free-poly"]);
    assert_eq!(r.code, EXIT_PASS);
    assert!(r.out.contains("X + 2"), "{}", r.out);
}

#[test]
fn depolarized_heisenberg_is_power_associative() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.json");
    let a = dir.path().join("a.json");
    let made = cli(&[
        "catalog",
        "heisenberg-p31",
        "--param",
        "zeta=1",
        "--param",
        "a11=2",
        "--param",
        "a22=3",
        "-o",
        path_str(&p),
    ]);
    assert_eq!(made.code, EXIT_PASS, "{}", made.err);
    assert_eq!(
        cli(&["depolarize", path_str(&p), "-o", path_str(&a)]).code,
        EXIT_PASS
    );
    let r = cli(&["power", path_str(&a), "--max-n", "6"]);
    assert_eq!(r.code, EXIT_PASS, "{}", r.out);
    assert!(r.out.contains("PASS power-criterion"));
}

#[test]
fn exit_codes_distinguish_pass_fail_usage() {
    let dir = tempfile::tempdir().unwrap();
    let unit = dir.path().join("unit.json");
    assert_eq!(
        cli(&["catalog", "unit", "-o", path_str(&unit)]).code,
        EXIT_PASS
    );
    let broken = write(dir.path(), "broken.json", BROKEN_BRACKET);
    let garbage = write(dir.path(), "garbage.json", "{\"format\": 1,");

    assert_eq!(cli(&["check", path_str(&unit)]).code, EXIT_PASS);
    let fail = cli(&["check", path_str(&broken)]);
    assert_eq!(fail.code, EXIT_FAIL);
    assert!(fail.out.contains("FAIL antisymmetry"), "{}", fail.out);
    for args in [
        vec!["check", path_str(&garbage)],
        vec!["check", "/nonexistent/spec.json"],
        vec!["check", path_str(&unit), "--suite", "flexible"],
        vec!["frobnicate"],
        vec!["power", path_str(&unit)],
        vec!["catalog", "matrix", "--param", "n=9"],
        vec!["witness", "free-poly", "--param", "lambda=2"],
    ] {
        let r = cli(&args);
        assert_eq!(r.code, EXIT_USAGE, "{args:?}");
        assert!(!r.err.is_empty(), "{args:?}");
    }
}

#[test]
fn twist_refuses_non_morphisms_unless_forced() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.json");
    assert_eq!(
        cli(&["catalog", "heisenberg-p32", "-o", path_str(&p)]).code,
        EXIT_PASS
    );
    let swap = write(
        dir.path(),
        "swap.json",
        r#"{"format": 1, "dim": 3, "matrix": [["0","1","0"],["1","0","0"],["0","0","1"]]}"#,
    );
    let r = cli(&["twist", path_str(&p), "--by", path_str(&swap)]);
    assert_eq!(r.code, EXIT_FAIL);
    assert!(r.out.starts_with("FAIL"));
    let t = dir.path().join("t.json");
    assert_eq!(
        cli(&[
            "twist",
            path_str(&p),
            "--by",
            path_str(&swap),
            "--force",
            "-o",
            path_str(&t)
        ])
        .code,
        EXIT_PASS
    );
    assert!(std::fs::read_to_string(&t)
        .unwrap()
        .contains("\"hom-poisson\""));
}

fn json_leaves(v: &serde_json::Value, out: &mut Vec<(String, bool)>) {
    match v {
        serde_json::Value::Array(items) => items.iter().for_each(|i| json_leaves(i, out)),
        _ => {
            out.push((
                v["identity"].as_str().unwrap().to_string(),
                v["passed"].as_bool().unwrap(),
            ));
            for p in v["parts"].as_array().unwrap() {
                json_leaves(p, out);
            }
        }
    }
}

fn text_leaves(text: &str) -> Vec<(String, bool)> {
    text.lines()
        .filter_map(|l| {
            let l = l.trim_start();
            let (status, rest) = l.split_once(' ')?;
            match status {
                "PASS" => Some((rest.to_string(), true)),
                "FAIL" => Some((rest.to_string(), false)),
                _ => None,
            }
        })
        .collect()
}

#[test]
fn text_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.json", BROKEN_BRACKET);
    let m = dir.path().join("m.json");
    cli(&["catalog", "matrix", "-o", path_str(&m)]);
    let cases: Vec<Vec<&str>> = vec![
        vec!["check", path_str(&broken)],
        vec!["check", path_str(&m)],
        vec!["power", path_str(&m), "--max-n", "5"],
        vec!["witness", "sl2", "--param", "lambda=3"],
        vec!["witness", "symplectic", "--param", "c=3/2"],
    ];
    for args in cases {
        let text = cli(&args);
        let mut json_args = vec!["--format", "json"];
        json_args.extend(&args);
        let json = cli(&json_args);
        assert_eq!(text.code, json.code, "{args:?}");
        let mut leaves = Vec::new();
        json_leaves(&serde_json::from_str(&json.out).unwrap(), &mut leaves);
        assert_eq!(text_leaves(&text.out), leaves, "{args:?}");
    }
}

#[test]
fn json_errors_are_machine_readable() {
    let r = cli(&["--format", "json", "check", "/nonexistent/spec.json"]);
    assert_eq!(r.code, EXIT_USAGE);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["exit"], 2);
}

#[test]
fn binary_exit_status_matches() {
    let bin = env!("CARGO_BIN_EXE_hompoisson");
    let ok = Command::new(bin)
        .args(["witness", "free-poly"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_PASS));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("X + 2"));
    let bad = Command::new(bin)
        .args(["check", "/nonexistent/spec.json"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    let listing = Command::new(bin).arg("catalog").output().unwrap();
    assert!(String::from_utf8_lossy(&listing.stdout).contains("heisenberg-p31"));
}
