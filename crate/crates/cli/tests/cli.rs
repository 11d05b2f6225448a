use std::path::PathBuf;
use std::process::Command;

use positivity_cli::{run, CommandResult, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;
use tempfile::TempDir;

fn positivity(args: &[&str]) -> CommandResult {
    let mut argv = vec!["positivity", "--json"];
    argv.extend_from_slice(args);
    run(argv)
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn write_json(dir: &TempDir, name: &str, value: &Value) -> String {
    write(dir, name, &value.to_string()).to_str().unwrap().to_owned()
}

#[test]
fn kissing_fixture_bound() {
    let r = positivity(&["bound", "kissing", "--cert", "paper-8"]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(r.payload["bound"], "240");
    assert_eq!(r.payload["gegenbauer_coeffs"][4], "133/2");
    assert_eq!(r.payload["jacobi_scaled_coeffs"][6], "2560/4641");
    let r = positivity(&["bound", "kissing", "--cert", "paper-24"]);
    assert_eq!(r.payload["bound"], "196560");
}

#[test]
fn tampered_certificate_is_a_check_failure() {
    let dir = TempDir::new().unwrap();
    let mut cert = positivity(&["bound", "kissing", "--cert", "paper-8"]).payload;
    cert["bound"] = Value::from("239");
    let path = write_json(&dir, "cert.json", &cert);
    let r = positivity(&["bound", "kissing", "--cert", &path]);
    assert_eq!(r.exit_code, EXIT_CHECK_FAILED);
    assert!(r.payload["reason"].as_str().unwrap().contains("bound"));

    // Flip the sign of the cubic coefficient: f is then positive somewhere on [-1, 1/2].
    cert["bound"] = Value::from("240");
    cert["poly"][3] = Value::from("40");
    let path = write_json(&dir, "bad.json", &cert);
    let r = positivity(&["bound", "kissing", "--cert", &path]);
    assert_eq!(r.exit_code, EXIT_CHECK_FAILED);
    assert_eq!(r.payload["accepted"], false);
}

#[test]
fn unknown_certificate_is_input_error() {
    let r = positivity(&["bound", "kissing", "--cert", "paper-9"]);
    assert_eq!(r.exit_code, EXIT_USAGE);
    assert!(r.payload["reason"].as_str().unwrap().contains("paper-8"));
}

#[test]
fn identity_is_psd() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "identity3.json", r#"{"n": 3, "rows": [[1,0,0],[0,1,0],[0,0,1]]}"#);
    let r = positivity(&["check", "psd", path.to_str().unwrap()]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(r.payload["is_psd"], true);
    assert_eq!(r.payload["rank"], 3);
}

#[test]
fn indefinite_matrix_fails_check() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "m.json", r#"{"n": 2, "rows": [[1,2],[2,1]]}"#);
    let r = positivity(&["check", "psd", path.to_str().unwrap()]);
    assert_eq!(r.exit_code, EXIT_CHECK_FAILED);
    assert!((r.payload["min_eigenvalue"].as_f64().unwrap() + 1.0).abs() < 1e-12);
    assert!(r.payload["reason"].is_string());
}

#[test]
fn malformed_matrices_are_input_errors() {
    let dir = TempDir::new().unwrap();
    for (name, body) in [
        ("asym.json", r#"{"n": 2, "rows": [[1,0.5],[0.4,1]]}"#),
        ("size.json", r#"{"n": 3, "rows": [[1,0],[0,1]]}"#),
        ("junk.json", "not json"),
    ] {
        let path = write(&dir, name, body);
        let r = positivity(&["check", "psd", path.to_str().unwrap()]);
        assert_eq!(r.exit_code, EXIT_USAGE, "{name}");
        assert!(r.payload["reason"].is_string());
    }
    let path = write(&dir, "ok.json", r#"{"n": 1, "rows": [[1]]}"#);
    let r = positivity(&["check", "psd", path.to_str().unwrap(), "--tol", "-1"]);
    assert_eq!(r.exit_code, EXIT_USAGE);
}

#[test]
fn preserver_witness_for_square_root() {
    let r = positivity(&["check", "preserver", "--power", "0.5", "--dim", "3", "--seed", "1"]);
    assert_eq!(r.exit_code, EXIT_OK);
    let w = &r.payload["witness"];
    assert_eq!(w["powered"].as_array().unwrap().len(), 3);
    assert!(w["min_eigenvalue"].as_f64().unwrap() < 0.0);
    // Same flags, same answer.
    let again = positivity(&["check", "preserver", "--power", "0.5", "--dim", "3", "--seed", "1"]);
    assert_eq!(r.payload, again.payload);
}

#[test]
fn preserver_integer_power_has_no_witness() {
    let r = positivity(&["check", "preserver", "--power", "2", "--dim", "4", "--trials", "50"]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(r.payload["found"], false);
    assert!(r.payload["witness"].is_null());
}

#[test]
fn midconvex_samples() {
    let dir = TempDir::new().unwrap();
    let squares = write(&dir, "sq.json", r#"{"samples": [[1,1],[2,4],[4,16],[8,64]]}"#);
    let r = positivity(&["check", "midconvex", squares.to_str().unwrap()]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(r.payload["all_hold"], true);
    // f = log on [1, 4]: midconvexity fails since log(2)^2 > log(1) log(4) = 0.
    let logs = write(&dir, "log.json", r#"{"samples": [[1,0],[2,0.6931471805599453],[4,1.3862943611198906]]}"#);
    let r = positivity(&["check", "midconvex", logs.to_str().unwrap()]);
    assert_eq!(r.exit_code, EXIT_CHECK_FAILED);
    assert!(r.payload["reason"].as_str().unwrap().contains("f(2)"));
}

#[test]
fn embed_output_feeds_check_psd() {
    let dir = TempDir::new().unwrap();
    let s = std::f64::consts::SQRT_2;
    let square = serde_json::json!({"n": 4, "rows": [[0,1,1,s],[1,0,s,1],[1,s,0,1],[s,1,1,0]]});
    let path = write_json(&dir, "square.json", &square);
    let r = positivity(&["embed", "euclidean", &path]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(r.payload["dimension"], 2);
    let gram = write_json(&dir, "gram.json", &r.payload);
    let psd = positivity(&["check", "psd", &gram]);
    assert_eq!(psd.exit_code, EXIT_OK);
    assert_eq!(psd.payload["rank"], 2);
}

#[test]
fn sphere_embedding_and_failures() {
    let dir = TempDir::new().unwrap();
    let h = std::f64::consts::FRAC_PI_2;
    let octant = serde_json::json!({"n": 3, "rows": [[0,h,h],[h,0,h],[h,h,0]]});
    let path = write_json(&dir, "octant.json", &octant);
    let r = positivity(&["embed", "sphere", &path]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(r.payload["dimension"], 3);
    let gram = write_json(&dir, "gram.json", &r.payload);
    assert_eq!(positivity(&["check", "psd", &gram]).exit_code, EXIT_OK);

    // Three points pairwise at distance 3 on a circle of circumference 2π cannot exist.
    let far = serde_json::json!({"n": 3, "rows": [[0,3,3],[3,0,3],[3,3,0]]});
    let path = write_json(&dir, "far.json", &far);
    let r = positivity(&["embed", "sphere", &path]);
    assert_eq!(r.exit_code, EXIT_CHECK_FAILED);
    assert_eq!(r.payload["status"], "not_embeddable");
    let gram = write_json(&dir, "gram2.json", &r.payload);
    assert_eq!(positivity(&["check", "psd", &gram]).exit_code, EXIT_CHECK_FAILED);

    let too_far = serde_json::json!({"n": 2, "rows": [[0,4],[4,0]]});
    let path = write_json(&dir, "too_far.json", &too_far);
    let r = positivity(&["embed", "sphere", &path]);
    assert_eq!(r.exit_code, EXIT_CHECK_FAILED);
    assert!(r.payload["reason"].as_str().unwrap().contains("exceeds pi"));
}

#[test]
fn gegenbauer_with_expansion() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "p.json", r#"{"poly": ["0", "0", "1"]}"#);
    let r = positivity(&["gegenbauer", "--dim", "3", "--k", "2", "--expand", path.to_str().unwrap()]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(r.payload["poly"], serde_json::json!(["-1/2", "0", "3/2"]));
    assert_eq!(r.payload["harmonics_dim"], "5");
    assert_eq!(r.payload["expansion"]["gegenbauer_coeffs"], serde_json::json!(["1/3", "0", "2/3"]));
    assert_eq!(positivity(&["gegenbauer", "--dim", "1", "--k", "2"]).exit_code, EXIT_USAGE);
}

#[test]
fn spherical_code_bound_small() {
    let r = positivity(&["bound", "spherical-code", "--dim", "3", "--cos", "-0.5", "--degree", "1", "--grid", "40"]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(r.payload["bound"], "3");
    assert_eq!(r.payload["cos_angle"], "-1/2");
    let r = positivity(&["bound", "spherical-code", "--dim", "3", "--cos", "1/2", "--degree", "0"]);
    assert_eq!(r.exit_code, EXIT_USAGE);
    let r = positivity(&["bound", "spherical-code", "--dim", "3", "--cos", "half", "--degree", "2"]);
    assert_eq!(r.exit_code, EXIT_USAGE);
}

#[test]
fn lattice_info_json_contract() {
    let r = positivity(&["lattice", "info", "--name", "E8"]);
    assert_eq!(r.exit_code, EXIT_OK);
    let p = &r.payload;
    for key in ["rank", "gram", "lambda1_sq", "kissing", "covolume_sq", "density", "hermite"] {
        assert!(p.get(key).is_some(), "missing {key}");
    }
    assert_eq!(p["rank"], 8);
    assert_eq!(p["lambda1_sq"], "2");
    assert_eq!(p["kissing"], 240);
    assert_eq!(p["covolume_sq"], "1");
    assert!(p["gram"][0].as_array().unwrap().iter().all(Value::is_string));
    assert_eq!(positivity(&["lattice", "info", "--name", "F4"]).exit_code, EXIT_USAGE);
}

#[test]
fn schur_identity_command() {
    let r = positivity(&["schur", "verify", "--N", "3", "--degree", "8", "--seed", "11", "--trials", "3"]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(r.payload["all_equal"], true);
    assert_eq!(r.payload["instances"].as_array().unwrap().len(), 3);
    assert_eq!(r.payload["cutoff"], 9);
    assert_eq!(positivity(&["schur", "verify", "--N", "0", "--degree", "3"]).exit_code, EXIT_USAGE);
}

#[test]
fn tables_without_leech() {
    let r = positivity(&["tables", "--skip-leech"]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(r.payload["rows"].as_array().unwrap().len(), 8);
    assert_eq!(r.payload["rows"][1]["hermite_pow_n"], "4/3");
    assert_eq!(r.payload["all_match"], true);
}

#[test]
fn usage_errors() {
    for args in [&["frobnicate"][..], &["check", "psd"], &["bound", "kissing", "--certificate", "paper-8"], &[]] {
        let r = positivity(args);
        assert_eq!(r.exit_code, EXIT_USAGE, "{args:?}");
        assert_eq!(r.payload["error"], "usage");
        assert!(r.payload["reason"].as_str().unwrap().contains("Usage"));
    }
    let help = run(["positivity", "--help"]);
    assert_eq!(help.exit_code, EXIT_OK);
    assert!(help.stdout().contains("tables"));
}

#[test]
fn text_mode_is_not_json() {
    let r = run(["positivity", "bound", "kissing", "--cert", "paper-8"]);
    assert!(!r.json);
    assert!(r.stdout().contains("bound f(1)/c_0 = 240"));
    assert!(serde_json::from_str::<Value>(&r.stdout()).is_err());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_positivity");
    let out = Command::new(bin).args(["--json", "bound", "kissing", "--cert", "paper-8"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let payload: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(payload["bound"], "240");

    let out = Command::new(bin).args(["--json", "--bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let payload: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(payload["reason"].is_string());

    let out = Command::new(bin).args(["--bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}
