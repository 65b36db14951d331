use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn levelone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_levelone"))
        .args(args)
        .output()
        .unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn fano_example() {
    let out = levelone(&["fano", "--n", "5", "--d", "2", "--r", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert_eq!(v["results"][0]["delta"], 6);
    assert_eq!(v["results"][0]["verdict"], "NONEMPTY");
    assert_eq!(v["request"]["command"], "fano");
}

#[test]
fn boundary_target_reports_count() {
    let v = report(&levelone(&[
        "fano", "--n", "2", "--d", "2", "--r", "1", "--class",
    ]));
    assert_eq!(v["results"][0]["count"], 56);
    assert!(v["results"][0]["class"].is_array());
}

#[test]
fn classify_small_window() {
    let v = report(&levelone(&[
        "classify",
        "--max-dim",
        "5",
        "--max-degree-sum",
        "6",
    ]));
    let found: Vec<String> = v["results"][0]["found"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["variety"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(
        found,
        [
            "X(2,2) in P^5",
            "X(2,2,2) in P^6",
            "X(2,3) in P^5",
            "X(3) in P^4",
            "X(4) in P^4",
            "X(2,2) in P^7",
            "X(2,2,2) in P^8",
            "X(3) in P^6"
        ]
    );
}

#[test]
fn weighted_hypersurface() {
    let v = report(&levelone(&[
        "wps",
        "--weights",
        "1,1,1,1,4",
        "--degree",
        "8",
    ]));
    assert_eq!(v["results"][0]["hodge_diamond"][3][0], 1);
    assert_eq!(v["results"][0]["calabi_yau_degree"], true);
}

#[test]
fn batch_runs_in_order_and_reports_bad_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("requests.ndjson");
    fs::write(
        &path,
        concat!(
            "{\"command\":\"ci\",\"dim\":3,\"degrees\":[3],\"jacobian\":true}\n",
            "\n",
            "{\"command\":\"frobnicate\"}\n",
            "{\"command\":\"cover\",\"n\":3,\"b\":4}\n",
        ),
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let out = levelone(&["--batch", p]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    let lines: Vec<_> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["line"].clone())
        .collect();
    assert_eq!(lines, [1, 4]);
    assert_eq!(v["warnings"][0]["line"], 3);
    assert_eq!(v["warnings"][0]["kind"], "batch_error");
    assert_eq!(v["request"]["lines"], 3);

    let strict = levelone(&["--batch", p, "--strict"]);
    assert_eq!(strict.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&strict.stderr).contains("line 3"));
}

#[test]
fn empty_batch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.ndjson");
    fs::write(&path, "").unwrap();
    let v = report(&levelone(&["--batch", path.to_str().unwrap()]));
    assert_eq!(v["results"], Value::Array(vec![]));
}

#[test]
fn out_file_and_table_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = levelone(&[
        "cover",
        "--n",
        "3",
        "--b",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["results"][0]["dim_J"], 10);

    let table = levelone(&["cover", "--n", "3", "--b", "4", "--format", "table"]);
    let text = String::from_utf8(table.stdout).unwrap();
    assert!(text.starts_with("[cover] 2:1 cover of P^3"), "{text}");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(levelone(&[]).status.code(), Some(1));
    assert_eq!(levelone(&["ci", "--dim", "3"]).status.code(), Some(1));
    assert_eq!(
        levelone(&["check", "--suite", "nightly"]).status.code(),
        Some(1)
    );
    assert_eq!(
        levelone(&["fano", "--n", "3", "--d", "1", "--r", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        levelone(&["cover", "--n", "3", "--m", "3", "--b", "4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(levelone(&["--help"]).status.code(), Some(0));
}

#[test]
fn timing_is_opt_in() {
    let v = report(&levelone(&["cover", "--n", "2", "--b", "6"]));
    assert!(v["elapsed_ms"].is_null());
    let v = report(&levelone(&["cover", "--n", "2", "--b", "6", "--timing"]));
    assert!(v["elapsed_ms"].is_u64());
}
