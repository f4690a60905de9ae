//! End-to-end tests of the `rookery` binary: golden payloads, exit codes,
//! output formats, and the stdout/stderr separation contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn rookery(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rookery"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn rook_vector_golden() {
    let out = rookery(&[
        "boards",
        "rook-vector",
        "--family",
        "linial",
        "--n",
        "4",
        "--t",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"r\":[\"1\",\"9\",\"22\",\"14\"]}\n");
    assert!(stderr(&out).contains("status: ok"));
}

#[test]
fn regions_golden() {
    let out = rookery(&[
        "arrangements",
        "regions",
        "--family",
        "linial",
        "--n",
        "4",
        "--a",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"regions\":\"36\",\"bounded\":\"4\"}\n");
}

#[test]
fn repeated_invocations_are_byte_identical() {
    let args = [
        "arrangements",
        "charpoly",
        "--n",
        "4",
        "--a",
        "0",
        "--b",
        "2",
    ];
    let first = rookery(&args);
    let second = rookery(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(
        stdout(&first),
        "{\"n\":4,\"a\":0,\"b\":2,\"chi\":{\"variable\":\"q\",\"coefficients\":\
         [\"-14\",\"15\",\"-6\",\"1\"]},\"regions\":\"36\",\"bounded\":\"4\"}\n"
    );
}

#[test]
fn invalid_input_exits_2_with_empty_stdout() {
    let out = rookery(&["boards", "rook-vector", "--family", "linial", "--n", "1", "--t", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(stderr(&out).contains("invalid input"));
    assert!(stderr(&out).contains("status: invalid-input"));

    // Unknown flags are also invalid input, reported by the parser.
    let out = rookery(&["boards", "rook-vector", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn resource_limit_exits_3() {
    let out = rookery(&[
        "trees",
        "count",
        "--class",
        "right-increasing",
        "--n",
        "9",
        "--k",
        "3",
        "--max-enum",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(stderr(&out).contains("resource limit"));
    assert!(stderr(&out).contains("status: resource-limit"));
}

#[test]
fn tree_count_payload() {
    let out = rookery(&["trees", "count", "--class", "ltree", "--n", "5", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"class\":\"ltree\",\"n\":5,\"k\":2,\"count\":\"246\"}\n"
    );
}

#[test]
fn bijection_round_trip_through_files() {
    let dir = std::env::temp_dir();
    let flat_path: PathBuf = dir.join(format!("rookery-flat-{}.json", std::process::id()));
    let tree_path: PathBuf = dir.join(format!("rookery-tree-{}.json", std::process::id()));
    std::fs::write(&flat_path, "{\"n\":6,\"k\":2,\"f\":[5,9,7,8,4]}").unwrap();

    let forward = rookery(&["bijection", "forward", "--input", flat_path.to_str().unwrap()]);
    assert_eq!(forward.status.code(), Some(0));
    let payload: serde_json::Value = serde_json::from_str(&stdout(&forward)).unwrap();
    assert_eq!(payload["exc"], serde_json::json!([1, 1]));
    assert_eq!(payload["sub"], serde_json::json!([1, 2]));
    assert_eq!(payload["tree"]["root"], serde_json::json!(5));
    std::fs::write(&tree_path, payload["tree"].to_string()).unwrap();

    let inverse = rookery(&["bijection", "inverse", "--input", tree_path.to_str().unwrap()]);
    assert_eq!(inverse.status.code(), Some(0));
    let payload: serde_json::Value = serde_json::from_str(&stdout(&inverse)).unwrap();
    assert_eq!(payload["f"]["f"], serde_json::json!([5, 9, 7, 8, 4]));

    std::fs::remove_file(&flat_path).ok();
    std::fs::remove_file(&tree_path).ok();
}

#[test]
fn missing_input_file_is_invalid_input() {
    let out = rookery(&["bijection", "forward", "--input", "/nonexistent/rookery.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_and_latex_formats() {
    let out = rookery(&["boards", "rook-vector", "--lambda", "3,2,1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "k,r\n0,1\n1,6\n2,7\n3,1\n");

    let out = rookery(&[
        "boards",
        "factorial-poly",
        "--family",
        "linial",
        "--n",
        "4",
        "--t",
        "1",
        "--format",
        "latex",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "x^{3} + 6x^{2} + 15x + 14\n");

    let out = rookery(&["boards", "rook-vector", "--lambda", "2,1", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "\\begin{tabular}{rr}\n$k$ & $r_k$ \\\\\n0 & 1 \\\\\n1 & 3 \\\\\n2 & 1 \\\\\n\\end{tabular}\n"
    );
}

#[test]
fn gjw_and_dp_routes_agree_through_the_cli() {
    let dp = rookery(&["boards", "factorial-poly", "--lambda", "5,4,2", "--mu", "2,1"]);
    let gjw = rookery(&["boards", "gjw-poly", "--lambda", "5,4,2", "--mu", "2,1"]);
    assert_eq!(dp.status.code(), Some(0));
    assert_eq!(dp.stdout, gjw.stdout);
}

#[test]
fn gessel_evaluation_and_polynomial() {
    let out = rookery(&[
        "gessel", "--n", "3", "--k", "2", "--eval", "u1=1,u2=1,v1=1,v2=1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"n\":3,\"k\":2,\"value\":\"30\"}\n");

    let out = rookery(&["gessel", "--n", "2", "--k", "2", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "v_{2} + v_{1} + u_{2} + u_{1}\n");

    // Incomplete assignments are invalid input.
    let out = rookery(&["gessel", "--n", "3", "--k", "2", "--eval", "u1=1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn series_verify_reports_pass() {
    let out = rookery(&[
        "series", "verify", "--identity", "f-equation", "--k", "2", "--order", "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"identity\":\"f-equation\",\"order\":6,\"status\":\"pass\",\"first_mismatch\":null}\n"
    );

    // Non-generic Drake parameters are rejected as invalid input.
    let out = rookery(&[
        "series", "verify", "--identity", "drake", "--k", "2", "--order", "4", "--params",
        "u1=1,u2=2,v1=4,v2=5",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_passes_and_reports_every_suite() {
    let out = rookery(&["verify", "all", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let payload: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(payload["passed"], serde_json::json!(true));
    assert_eq!(payload["suites"].as_array().unwrap().len(), 17);
}
