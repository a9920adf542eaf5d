use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const ZERO_AND_Q: &str = r#"{
  "format": "mengerkit-algebra-v1",
  "kind": "concrete",
  "flavor": "menger",
  "n": 2,
  "base_size": 2,
  "functions": [[null, null, null, null], [0, null, null, null]]
}"#;

/// Left projection on two elements as a plain algebra: `x ⊕i y = x`.
const LEFT_PROJECTION: &str = r#"{
  "format": "mengerkit-algebra-v1",
  "kind": "abstract",
  "flavor": "plain",
  "n": 2,
  "size": 2,
  "mann": [[[0, 0], [1, 1]], [[0, 0], [1, 1]]]
}"#;

fn mengerkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mengerkit"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

struct Dir {
    tmp: TempDir,
}

impl Dir {
    fn new() -> Self {
        Dir {
            tmp: tempfile::tempdir().unwrap(),
        }
    }

    fn write(&self, name: &str, text: &str) -> String {
        let p = self.tmp.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> String {
        self.tmp.path().join(name).to_str().unwrap().to_string()
    }

    fn relation(&self, name: &str, rows: &[[u8; 2]]) -> String {
        let matrix: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
        let doc = serde_json::json!({ "format": "mengerkit-relation-v1", "size": 2, "matrix": matrix });
        self.write(name, &doc.to_string())
    }
}

#[test]
fn check_passes_on_zero_and_q() {
    let d = Dir::new();
    let alg = d.write("zq.json", ZERO_AND_Q);
    let out = mengerkit(&["check", "--algebra", &alg, "--json"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    let names: Vec<&str> = report["results"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["associativity", "Menger identities", "representability"]);
    assert!(report["results"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["outcome"]["verdict"] == "pass"));
    assert_eq!(report["results"]["zero"], 0);
}

#[test]
fn verify_triplet_passes() {
    let d = Dir::new();
    let alg = d.write("zq.json", ZERO_AND_Q);
    let chi = d.relation("chi.json", &[[1, 1], [0, 1]]);
    let gamma = d.relation("gamma.json", &[[0, 0], [0, 1]]);
    let pi = d.relation("pi.json", &[[1, 0], [0, 1]]);
    let out = mengerkit(&[
        "verify",
        "--algebra",
        &alg,
        "--target",
        "triplet",
        "--chi",
        &chi,
        "--gamma",
        &gamma,
        "--pi",
        &pi,
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS gamma = gamma_P"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn failing_target_exits_with_one_and_a_witness() {
    let d = Dir::new();
    let alg = d.write("zq.json", ZERO_AND_Q);
    // π is not the kernel of χ
    let chi = d.relation("chi.json", &[[1, 1], [0, 1]]);
    let gamma = d.relation("gamma.json", &[[0, 0], [0, 1]]);
    let pi = d.relation("pi.json", &[[1, 1], [1, 1]]);
    let out = mengerkit(&[
        "classify",
        "--algebra",
        &alg,
        "--target",
        "triplet",
        "--chi",
        &chi,
        "--gamma",
        &gamma,
        "--pi",
        &pi,
        "--json",
    ]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    assert_eq!(report["verdict"], "fail");
    let failed = report["results"]["conditions"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["outcome"]["verdict"] == "fail")
        .unwrap();
    assert!(failed["outcome"]["witness"]["law"].is_string());
}

#[test]
fn non_square_relation_is_an_input_error() {
    let d = Dir::new();
    let alg = d.write("zq.json", ZERO_AND_Q);
    let bad = d.write(
        "bad.json",
        r#"{"format": "mengerkit-relation-v1", "size": 2, "matrix": [[1, 0, 1], [0, 1]]}"#,
    );
    let out = mengerkit(&["classify", "--algebra", &alg, "--target", "chi", "--chi", &bad]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("matrix[0]"));
}

#[test]
fn malformed_algebras_name_the_field() {
    let d = Dir::new();
    let unknown = d.write("a.json", &ZERO_AND_Q.replace("\"n\": 2", "\"n\": 2, \"extra\": 1"));
    let out = mengerkit(&["check", "--algebra", &unknown]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("extra"));

    let out = mengerkit(&["check", "--algebra", &d.path("missing.json")]);
    assert_eq!(code(&out), 2);
    let out = mengerkit(&["check", "--algebra", &d.path("a.json"), "--no-such-flag"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn relations_closure_and_represent_write_files() {
    let d = Dir::new();
    let alg = d.write("zq.json", ZERO_AND_Q);
    let dir = d.path("rels");
    assert_eq!(
        code(&mengerkit(&["relations", "--algebra", &alg, "--out-dir", &dir])),
        0
    );
    for name in ["chi", "gamma", "pi"] {
        assert!(Path::new(&dir).join(format!("{name}.json")).exists());
    }
    let chi = d.path("chi0.json");
    let out = mengerkit(&["closure", "--algebra", &alg, "--kind", "chi0", "--out", &chi]);
    assert_eq!(code(&out), 0);
    let closed = std::fs::read_to_string(&chi).unwrap();
    assert_eq!(
        closed,
        std::fs::read_to_string(PathBuf::from(&dir).join("chi.json")).unwrap()
    );

    let pi = format!("{dir}/pi.json");
    let out = mengerkit(&["closure", "--algebra", &alg, "--kind", "chi0", "--pi", &pi]);
    assert_eq!(code(&out), 2);

    let rep = d.path("rep.json");
    let gamma = format!("{dir}/gamma.json");
    let out = mengerkit(&[
        "represent",
        "--algebra",
        &alg,
        "--chi",
        &chi,
        "--gamma",
        &gamma,
        "--out",
        &rep,
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["gamma"], serde_json::json!([[0, 0], [0, 1]]));
    assert!(std::fs::read_to_string(&rep)
        .unwrap()
        .contains("mengerkit-representation-v1"));
}

#[test]
fn relations_need_a_concrete_algebra() {
    let d = Dir::new();
    let alg = d.write("lp.json", LEFT_PROJECTION);
    let out = mengerkit(&["relations", "--algebra", &alg, "--out-dir", &d.path("r")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("kind"));
}

#[test]
fn menger_flavor_on_a_plain_algebra_is_rejected() {
    let d = Dir::new();
    let alg = d.write("lp.json", LEFT_PROJECTION);
    assert_eq!(code(&mengerkit(&["check", "--algebra", &alg])), 0);
    assert_eq!(code(&mengerkit(&["check", "--algebra", &alg, "--flavor", "menger"])), 2);
}

#[test]
fn oracle_agrees_and_respects_the_cap() {
    let d = Dir::new();
    let alg = d.write("zq.json", ZERO_AND_Q);
    let out = mengerkit(&["oracle", "--algebra", &alg, "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["agree"], true);
    assert_eq!(code(&mengerkit(&["oracle", "--algebra", &alg, "--cap", "1"])), 3);
}

#[test]
fn generate_is_deterministic_and_verifiable() {
    let d = Dir::new();
    let (a, b) = (d.path("a"), d.path("b"));
    for dir in [&a, &b] {
        let out = mengerkit(&[
            "generate",
            "--base",
            "2",
            "--gens",
            "2",
            "--seed",
            "3",
            "--count",
            "4",
            "--out-dir",
            dir,
        ]);
        assert_eq!(code(&out), 0);
    }
    let mut files = Vec::new();
    for seed in 3..7 {
        let name = format!("algebra-{seed}.json");
        let fa = std::fs::read_to_string(Path::new(&a).join(&name)).unwrap();
        assert_eq!(fa, std::fs::read_to_string(Path::new(&b).join(&name)).unwrap());
        files.push(Path::new(&a).join(&name).to_str().unwrap().to_string());
    }
    let mut args = vec!["verify", "--target", "chi-gamma", "--json"];
    for f in &files {
        args.extend(["--algebra", f.as_str()]);
    }
    let first = mengerkit(&args);
    assert_eq!(code(&first), 0);
    // the machine report is byte-stable
    assert_eq!(first.stdout, mengerkit(&args).stdout);
    let results = json(&first)["results"].as_array().unwrap().clone();
    let order: Vec<&str> = results.iter().map(|r| r["algebra"].as_str().unwrap()).collect();
    assert_eq!(order, files.iter().map(String::as_str).collect::<Vec<_>>());
}

#[test]
fn generation_past_the_cap_is_a_capacity_error() {
    let d = Dir::new();
    let out = mengerkit(&[
        "generate",
        "--base",
        "3",
        "--gens",
        "2",
        "--closure-cap",
        "1",
        "--out-dir",
        &d.path("g"),
    ]);
    assert_eq!(code(&out), 3);
}
