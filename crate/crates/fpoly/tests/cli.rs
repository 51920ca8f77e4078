//! End-to-end tests of the command line: exit codes, text output, and the
//! JSON schema contract.

use fpoly::gallery;
use std::fs;
use std::path::{Path, PathBuf};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["fpoly".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = fpoly::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn params_on_the_bridged_blobs() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(
        dir.path(),
        "blobs.graph",
        &gallery::example3(1).unwrap().graph.to_text(),
    );
    let (code, out, _) = run(&["params", graph.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("delta*_f = 3/2"), "got: {out}");
    assert!(out.contains("gamma*_f = 5/3"), "got: {out}");

    let (code, out, _) = run(&["params", graph.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "fpoly/1");
    assert_eq!(v["delta_star"], "3/2");
    assert_eq!(v["gamma_star"], "5/3");
    assert_eq!(v["gamma_witness"]["u"], serde_json::json!([0, 1, 2]));
    // Rational strings re-parse to the identical value.
    assert_eq!(
        fpoly::rat::parse_rat(v["gamma_star"].as_str().unwrap()).unwrap(),
        fpoly::rat::rat(5, 3)
    );
}

#[test]
fn gallery_verification_exit_codes() {
    let (code, out, _) = run(&["gallery", "verify", "example1"]);
    assert_eq!(code, 0);
    assert!(out.contains("all claims passed"), "got: {out}");

    let (code, out, _) = run(&["gallery", "verify", "example2", "--k", "5", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["all_passed"], true);

    let (code, _, err) = run(&["gallery", "verify", "example2", "--k", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("odd"), "got: {err}");

    let (code, _, err) = run(&["gallery", "verify", "unknown-item"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown gallery item"), "got: {err}");

    let (code, out, _) = run(&["gallery", "list"]);
    assert_eq!(code, 0);
    assert!(out.contains("example1") && out.contains("c4-chord"));
}

#[test]
fn member_and_qcheck_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(
        dir.path(),
        "pair.graph",
        "vertex a 2\nvertex b 2\nedge a b 2\n",
    );
    let outside = write(dir.path(), "outside.point", "0 2\n1 0\n");
    let inside = write(dir.path(), "inside.point", "0 1/2\n1 1/2\n");

    let (code, out, _) = run(&[
        "member",
        graph.to_str().unwrap(),
        outside.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("non-member"), "got: {out}");

    let (code, out, _) = run(&["member", graph.to_str().unwrap(), inside.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: member"), "got: {out}");

    // (2,0) satisfies the plain system...
    let (code, out, _) = run(&[
        "qcheck",
        graph.to_str().unwrap(),
        outside.to_str().unwrap(),
        "--variant",
        "q",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("0 violations"), "got: {out}");

    // ...but not the unit-augmented one.
    let (code, out, _) = run(&[
        "qcheck",
        graph.to_str().unwrap(),
        outside.to_str().unwrap(),
        "--variant",
        "q-unit",
        "--format",
        "json",
    ]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["violations"][0]["family"], "unit");
    assert_eq!(v["violations"][0]["lhs"], "2");

    // Membership agrees with the exact inequality description.
    let (code, out, _) = run(&[
        "qcheck",
        graph.to_str().unwrap(),
        inside.to_str().unwrap(),
        "--variant",
        "edmonds-f",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("0 violations"), "got: {out}");
}

#[test]
fn point_file_warnings_go_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(
        dir.path(),
        "pair.graph",
        "vertex a 2\nvertex b 2\nedge a b 2\n",
    );
    let sparse = write(dir.path(), "sparse.point", "0 1\n");
    let (code, _, err) = run(&["member", graph.to_str().unwrap(), sparse.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(err.contains("warning: edge 1 missing"), "got: {err}");
}

#[test]
fn index_and_bounds_commands() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(
        dir.path(),
        "triangle.graph",
        "vertex a 1\nvertex b 1\nvertex c 1\nedge a b\nedge b c\nedge a c\n",
    );
    let (code, out, _) = run(&["index", graph.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("chi'_f = 3"), "got: {out}");

    let (code, out, _) = run(&["frac-index", graph.to_str().unwrap(), "--mode", "equality"]);
    assert_eq!(code, 0);
    assert!(out.contains("chi'*_f = 3"), "got: {out}");

    let (code, out, _) = run(&["bounds", graph.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["chi"], 3);
    assert_eq!(v["chi_star"], "3");
    assert_eq!(v["interchange_ok"], true);
    assert_eq!(v["ceil_identity"], true);

    let (code, out, _) = run(&["bounds", graph.to_str().unwrap(), "--decimal"]);
    assert_eq!(code, 0);
    assert!(out.contains("(~"), "got: {out}");
}

#[test]
fn sweep_command_reports_cleanly() {
    let (code, out, _) = run(&[
        "sweep",
        "--count",
        "6",
        "--seed",
        "11",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["instances_tested"], 6);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(!v["qf_gap_witnesses"].as_array().unwrap().is_empty());
    // The injected gallery pool guarantees a graph with gamma* > w*.
    assert!(v["gamma_exceeds_density_count"].as_u64().unwrap() >= 1);

    // Determinism: identical invocations render identical bytes.
    let (_, again, _) = run(&[
        "sweep",
        "--count",
        "6",
        "--seed",
        "11",
        "--format",
        "json",
    ]);
    assert_eq!(out, again);
}

#[test]
fn usage_and_input_errors_exit_two() {
    let (code, _, err) = run(&["params", "/nonexistent/path.graph"]);
    assert_eq!(code, 2);
    assert!(err.contains("error:"), "got: {err}");

    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.graph", "vertex a 1\nedge a a\n");
    let (code, _, err) = run(&["params", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "got: {err}");

    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 2);

    let tiny_cap = run(&["gallery", "verify", "example3", "--cap-vertices", "2"]);
    assert_eq!(tiny_cap.0, 2);
    assert!(tiny_cap.2.contains("cap"), "got: {}", tiny_cap.2);

    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("fpoly"));
}
