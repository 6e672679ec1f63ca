use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn jortho(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jortho")).args(args).current_dir(dir).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn make_constant_and_check_everything() {
    let dir = TempDir::new().unwrap();
    let out = jortho(&["make", "--family", "constant", "--signature", "1,2", "--mu", "3", "-o", "c.json"], dir.path());
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    for check in ["osserman", "diagonalizable", "jacobi-dual", "weak-jacobi-dual", "jacobi-orthogonal", "constant-curvature"] {
        let out = jortho(&["check", "c.json", "--check", check], dir.path());
        assert_eq!(code(&out), 0, "{check}: {}", stderr(&out));
        assert_ne!(stdout_json(&out)["verdict"], "fails");
    }
    let out = jortho(&["check", "c.json", "--check", "k-stein", "--k", "2"], dir.path());
    assert_eq!(code(&out), 0);
    let rep = stdout_json(&out);
    assert_eq!(rep["values"]["c1"], "6");
    assert_eq!(rep["values"]["c2"], "18");
}

#[test]
fn make_round_trips_byte_identically() {
    let dir = TempDir::new().unwrap();
    let first = jortho(&["make", "--family", "random", "--signature", "2,2", "--seed", "9"], dir.path());
    assert_eq!(code(&first), 0);
    fs::write(dir.path().join("r.json"), &first.stdout).unwrap();
    let again = jortho(&["make", "--family", "random", "--signature", "2,2", "--seed", "9"], dir.path());
    assert_eq!(first.stdout, again.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    let back = jortho::tensor::io::from_json(&text).unwrap();
    assert_eq!(jortho::tensor::io::to_json(&back), text);
}

#[test]
fn quaternionic_family() {
    let dir = TempDir::new().unwrap();
    let args = ["make", "--family", "quasi-clifford:quaternionic", "--signature", "0,4", "--mu", "0,1,0,0", "-o", "q.json"];
    assert_eq!(code(&jortho(&args, dir.path())), 0);
    let text = fs::read_to_string(dir.path().join("q.json")).unwrap();
    let expected = jortho::tensor::catalog::family_tensor(
        "quaternionic",
        0,
        4,
        &[0, 1, 0, 0].map(jortho::exactnum::int),
    )
    .unwrap();
    assert_eq!(text, jortho::tensor::io::to_json(&expected));
    let out = jortho(&["check", "q.json", "--check", "jacobi-orthogonal"], dir.path());
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["verdict"], "holds-exact");

    let out = jortho(&["make", "--family", "quasi-clifford:quaternionic", "--signature", "1,3"], dir.path());
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unavailable in signature"), "{}", stderr(&out));
}

#[test]
fn diagonal_dim3_witness() {
    let dir = TempDir::new().unwrap();
    // h ∧ g with h = diag(1/2, -1/2, 3/2) has sectional components (0, 2, 1)
    let args = ["make", "--family", "kn", "--signature", "0,3", "--h", "1/2,0,0;0,-1/2,0;0,0,3/2", "-o", "d.json"];
    assert_eq!(code(&jortho(&args, dir.path())), 0);
    let out = jortho(&["check", "d.json", "--check", "jacobi-orthogonal"], dir.path());
    assert_eq!(code(&out), 1);
    let w = &stdout_json(&out)["witness"];
    assert_eq!(w["vectors"]["X"], serde_json::json!(["1", "1", "0"]));
    assert_eq!(w["vectors"]["Y"], serde_json::json!(["1", "-1", "1"]));
    assert_eq!(w["values"]["value"], "-3");
    let out = jortho(&["check", "d.json", "--check", "constant-curvature"], dir.path());
    assert_eq!(code(&out), 1);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    fs::write(p.join("bad.json"), "{\"dim\": 2,\n \"signature\": [0, 2],\n \"components\": [ }").unwrap();
    let out = jortho(&["check", "bad.json", "--check", "osserman"], p);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    let broken = r#"{"dim": 2, "signature": [0, 2], "components": [
        {"i": 1, "j": 2, "k": 1, "l": 2, "v": "1"},
        {"i": 1, "j": 2, "k": 2, "l": 1, "v": "1"}]}"#;
    fs::write(p.join("broken.json"), broken).unwrap();
    let out = jortho(&["check", "broken.json", "--check", "osserman"], p);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("violated at (i,j,k,l)=(1,2,2,1)"), "{}", stderr(&out));

    assert_eq!(code(&jortho(&["make", "--family", "constant", "--signature", "12"], p)), 2);
    assert_eq!(code(&jortho(&["make", "--family", "bogus", "--signature", "1,2"], p)), 2);
    assert_eq!(code(&jortho(&["make", "--family", "skew", "--signature", "0,2", "--matrix", "1,0;0,1"], p)), 2);
    assert_eq!(code(&jortho(&["verify", "bogus-name"], p)), 2);
    assert_eq!(code(&jortho(&["verify", "dim3", "--signature", "0,4"], p)), 2);
}

#[test]
fn backend_flags() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    jortho(&["make", "--family", "quasi-clifford:complex", "--signature", "2,2", "--mu", "1,2", "-o", "c.json"], p);
    let out = jortho(&["check", "c.json", "--check", "osserman", "--backend", "float"], p);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--tol"));
    let out = jortho(&["check", "c.json", "--check", "osserman", "--tol", "1e-9"], p);
    assert_eq!(code(&out), 2);
    let out = jortho(&["check", "c.json", "--check", "osserman", "--backend", "float", "--tol", "1e-9"], p);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout_json(&out)["verdict"], "holds-probabilistic");
    let out = jortho(&["check", "c.json", "--check", "k-stein"], p);
    assert_eq!(code(&out), 2);
}

#[test]
fn spectrum_command() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    jortho(&["make", "--family", "constant", "--signature", "1,2", "-o", "r1.json"], p);
    let out = jortho(&["spectrum", "r1.json", "--at", "1,0,0", "--reduced"], p);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let rep = stdout_json(&out);
    // w̃ = (λ+1)² and normalized eigenvalue 1 of multiplicity 2
    assert_eq!(rep["char_poly"], serde_json::json!(["1", "2", "1"]));
    assert_eq!(rep["eigenvalues"][0]["lambda"], "1");
    assert_eq!(rep["eigenvalues"][0]["alg_mult"], 2);
    assert_eq!(rep["null_eigenvectors"], false);

    jortho(&["make", "--family", "constant", "--signature", "1,2", "--mu", "0", "-o", "zero.json"], p);
    let rep = stdout_json(&jortho(&["spectrum", "zero.json", "--at", "1,2,3"], p));
    assert_eq!(rep["eigenvalues"][0]["lambda"], "0");
    assert_eq!(rep["eigenvalues"][0]["geo_mult"], 3);

    jortho(&["make", "--family", "constant", "--signature", "1,1", "-o", "l.json"], p);
    let out = jortho(&["spectrum", "l.json", "--at", "1,1", "--reduced"], p);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("reduced operator undefined for null X"));
}

#[test]
fn verify_command() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    let out = jortho(&["verify", "clifford-jo", "--signature", "2,2", "--trials", "3"], p);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let rep = stdout_json(&out);
    assert_eq!(rep["passed"], true);
    assert_eq!(rep["suite"], "clifford-jo");
    let again = jortho(&["verify", "clifford-jo", "--signature", "2,2", "--trials", "3"], p);
    assert_eq!(out.stdout, again.stdout);
    assert!(!p.join("counterexamples.json").exists());

    let out = jortho(&["verify", "dim3", "--trials", "30", "--seed", "7"], p);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["counts"]["fail"], 0);
}
