use std::path::PathBuf;
use std::process::Command;

use flagcd::{run, Outcome};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn flagcd(args: &[&str]) -> Outcome {
    run(std::iter::once("flagcd").chain(args.iter().copied()))
}

fn stdout(args: &[&str]) -> String {
    let out = flagcd(args);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    out.stdout
}

#[test]
fn worked_examples() {
    assert_eq!(stdout(&["psi-toric", &data("example2.toric")]), "(a-b)^3 + 7*dc + 8*cd\n");
    assert_eq!(stdout(&["psi-unbounded", &data("cube6.affine")]), "1*ccc + 22*dc + 24*cd\n");
    assert_eq!(stdout(&["chi", &data("example1.toric"), "--at", "0"]), "3\n");
    assert_eq!(stdout(&["chi", &data("example2.toric")]), "t^2 - 3*t + 8\n");
    assert_eq!(stdout(&["regions", &data("cube6.affine")]), "regions = 27\nbounded = 1\nunbounded = 26\n");
    assert_eq!(stdout(&["fvector-toric", &data("example2.toric"), "--via", "flag_h"]), "f_0 = 7\nf_1 = 15\nf_2 = 8\n");
    assert_eq!(stdout(&["cdindex", &data("butterfly3.poset")]), "1*cc\n");
}

#[test]
fn abindex_methods_agree() {
    let file = data("example2.toric");
    let default = stdout(&["abindex", &file]);
    assert_eq!(default, "1*aa + 2*ba + 6*ab + 6*bb\n");
    for via in ["chains", "stanley", "flag_h"] {
        assert_eq!(stdout(&["abindex", &file, "--via", via]), default);
    }
}

#[test]
fn flag_vectors_of_the_cube_lattice() {
    let out = stdout(&["flag", &data("cube6.affine")]);
    assert!(out.starts_with("{} f=1 h=1\n{1} f=6 h=5\n"), "{out}");
}

#[test]
fn output_is_deterministic() {
    for args in [["fibers", "example2.toric"], ["verify", "example2.toric"], ["flag", "cube6.affine"]] {
        let file = data(args[1]);
        let first = flagcd(&[args[0], &file, "--format", "json"]);
        let second = flagcd(&[args[0], &file, "--format", "json"]);
        assert_eq!(first, second);
    }
}

#[test]
fn json_schema() {
    let file = data("example2.toric");
    let out = stdout(&["verify", &file, "--q", "30", "--format", "json"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["input"], Value::String(file));
    assert_eq!(doc["operation"], "verify");
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks.len() >= 10);
    assert!(checks.iter().all(|c| c["status"] == "pass"), "{out}");
    assert_eq!(doc["result"]["passed"], checks.len());
    let z: Value = serde_json::from_str(&stdout(&["zaslavsky", &data("example2.toric"), "--format", "json"])).unwrap();
    assert_eq!(z["result"]["Z_t"], 8);
    assert_eq!(z["checks"], Value::Array(Vec::new()));
}

#[test]
fn verify_every_sample() {
    for file in ["example1.toric", "example2.toric", "cube6.affine", "octahedron.affine", "k4.graph", "butterfly3.poset"] {
        let out = flagcd(&["verify", &data(file)]);
        assert_eq!(out.code, 0, "{file}: {}", out.stdout);
        assert!(!out.stdout.contains(": fail"), "{file}: {}", out.stdout);
    }
}

#[test]
fn graph_regions_checks() {
    let out = stdout(&["graph-regions", &data("k4.graph")]);
    assert!(out.starts_with("chromatic = t^4 - 6*t^3 + 11*t^2 - 6*t\nregions = 24\ntoric regions = 6\n"));
    assert_eq!(out.matches(": pass").count(), 7);
}

#[test]
fn usage_errors_exit_two() {
    let file = data("k4.graph");
    assert_eq!(flagcd(&["frobnicate", &file]).code, 2);
    assert_eq!(flagcd(&["chi", &file, "--colour"]).code, 2);
    assert_eq!(flagcd(&["chi", &file, "--via", "stanley"]).code, 2);
    assert_eq!(flagcd(&["psi-toric", &file]).code, 2);
    assert_eq!(flagcd(&["chi", &data("example1.toric"), "--at", "one"]).code, 2);
    assert_eq!(flagcd(&["--help"]).code, 0);
}

#[test]
fn domain_errors_exit_one() {
    let dir = std::env::temp_dir().join(format!("flagcd-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    };
    let bad = write("bad.poset", "poset 3 2\n0 0\n1 1\n2 2\n0 < 2\n");
    let out = flagcd(&["abindex", &bad]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 5"), "{}", out.stderr);
    let flat = write("flat.toric", "toric 2\n1 0 | 0\n");
    let out = flagcd(&["psi-toric", &flat]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("not essential") && out.stderr.contains("requires an essential"), "{}", out.stderr);
    let out = flagcd(&["psi-central", &data("cube6.affine")]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("not central"));
    let out = flagcd(&["chi", &data("example1.toric"), "--q", "4"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("not a multiple of N = 3"));
    assert_eq!(flagcd(&["chi", &dir.join("missing").display().to_string()]).code, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_flagcd");
    let ok = Command::new(bin).args(["psi-toric", &data("example2.toric")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "(a-b)^3 + 7*dc + 8*cd\n");
    let usage = Command::new(bin).args(["nope", "x"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    assert!(String::from_utf8(usage.stderr).unwrap().contains("Usage"));
}
