use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn torsionk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torsionk")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_reports_contextuality() {
    let out = torsionk(&["analyze", "builtin:mermin-square"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["torsionk_schema"], 1);
    assert_eq!(r["result"]["contextual"], true);
    assert_eq!(r["result"]["classical_value"]["value"], "5/6");
    assert!(String::from_utf8_lossy(&out.stderr).contains("contextual"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "builtin:mermin-star", "--solution", "builtin:mermin-star"];
    let a = torsionk(&args);
    let b = torsionk(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        vec!["frobnicate"],
        vec!["analyze", "builtin:no-such-fixture"],
        vec!["cohomology", "builtin:torus", "--coeff", "2", "--deg", "3"],
        vec!["analyze", "/nonexistent/system.json"],
    ] {
        let out = torsionk(&args);
        assert_eq!(out.status.code(), Some(64), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    assert_eq!(torsionk(&["--help"]).status.code(), Some(0));
}

#[test]
fn unsupported_requests_exit_65() {
    let out = torsionk(&["homotopy", "--spectrum", "creal", "--m", "4", "--r", "3"]);
    assert_eq!(out.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    // dimension 4 solution claimed to act on U(8)
    let out = torsionk(&[
        "class",
        "builtin:mermin-square",
        "--solution",
        "builtin:mermin-square",
        "--realization",
        "builtin:mermin-square",
        "--m",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(65));
}

#[test]
fn malformed_json_exits_64() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ \"d\": 2, \"variables\": [").unwrap();
    assert_eq!(torsionk(&["analyze", path_str(&bad)]).status.code(), Some(64));
    std::fs::write(&bad, r#"{"d": 2, "variables": ["a"], "constraints": [], "extra": 1}"#).unwrap();
    assert_eq!(torsionk(&["analyze", path_str(&bad)]).status.code(), Some(64));
}

#[test]
fn builtin_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = torsionk(&["builtin", "mermin-square", "--out-dir", path_str(dir.path())]);
    assert_eq!(out.status.code(), Some(0));
    let lcs = dir.path().join("mermin_square.lcs.json");
    let sol = dir.path().join("mermin_square.solution.json");
    let cw = dir.path().join("mermin_square.realization.json");
    for f in [&lcs, &sol, &cw] {
        assert!(f.exists(), "{}", f.display());
    }

    let verify = torsionk(&["verify", path_str(&lcs), "--solution", path_str(&sol)]);
    assert_eq!(verify.status.code(), Some(0));
    assert_eq!(report(&verify)["result"]["passed"], true);

    let class = torsionk(&[
        "class",
        path_str(&lcs),
        "--solution",
        path_str(&sol),
        "--realization",
        path_str(&cw),
        "--m",
        "4",
    ]);
    assert_eq!(class.status.code(), Some(0));
    assert_eq!(report(&class)["result"]["class"], "(0,0;1)");

    let h1 = torsionk(&["cohomology", path_str(&cw), "--coeff", "2", "--deg", "1"]);
    assert_eq!(report(&h1)["result"]["group"]["display"], "Z/2 + Z/2");

    // file and builtin inputs give the same analysis
    let from_file = report(&torsionk(&["analyze", path_str(&lcs)]));
    let from_builtin = report(&torsionk(&["analyze", "builtin:mermin-square"]));
    assert_eq!(from_file["result"], from_builtin["result"]);
}

#[test]
fn failed_verification_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = torsionk(&["builtin", "mermin-square", "--out-dir", path_str(dir.path())]);
    assert_eq!(out.status.code(), Some(0));
    let sol = dir.path().join("mermin_square.solution.json");
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&sol).unwrap()).unwrap();
    doc["assignment"]["YY"] = serde_json::json!({"phase": 0, "x": [0, 0], "z": [0, 0]});
    std::fs::write(&sol, serde_json::to_string(&doc).unwrap()).unwrap();

    let lcs = dir.path().join("mermin_square.lcs.json");
    let verify = torsionk(&["verify", path_str(&lcs), "--solution", path_str(&sol)]);
    assert_eq!(verify.status.code(), Some(2));
    let r = report(&verify);
    assert_eq!(r["result"]["passed"], false);
    assert!(!r["result"]["failing_rows"].as_array().unwrap().is_empty());

    let class = torsionk(&[
        "class",
        path_str(&lcs),
        "--solution",
        path_str(&sol),
        "--realization",
        "builtin:mermin-square",
        "--m",
        "4",
    ]);
    assert_eq!(class.status.code(), Some(2));
}

#[test]
fn homotopy_answers() {
    let r = report(&torsionk(&["homotopy", "--spectrum", "kosym", "--r", "3"]));
    assert_eq!(r["result"]["group"]["display"], "Z/8");
    let r = report(&torsionk(&["homotopy", "--spectrum", "cdm", "--d", "12", "--m", "8", "--r", "2"]));
    assert_eq!(r["result"]["group"]["display"], "Z/4");
    let r = report(&torsionk(&["homotopy", "--spectrum", "creal", "--m", "4", "--r", "2"]));
    assert_eq!(r["result"]["order"], 4);
}
