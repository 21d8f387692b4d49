use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn conjq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conjq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../schemas/report.schema.json");
    let schema: Value = serde_json::from_str(text).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

/// Runs `args` with `--json`, validates the report and returns it.
fn json_report(args: &[&str], expected_code: i32) -> Value {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut full: Vec<&str> = args.to_vec();
    let path_str = path.to_str().unwrap();
    full.extend(["--json", path_str]);
    let out = conjq(&full);
    assert_eq!(
        code(&out),
        expected_code,
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let value: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = schema();
    let errors: Vec<String> = validator
        .iter_errors(&value)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}");
    value
}

#[test]
fn classes_reports() {
    let v = json_report(&["classes", "--catalog", "symmetric:4"], 0);
    let mut sizes: Vec<u64> = v["report"]["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [1, 3, 6, 6, 8]);

    let v = json_report(&["classes", "--catalog", "cyclic:5"], 0);
    assert_eq!(v["report"]["class_count"], 5);
}

#[test]
fn malformed_group_file_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.grp");
    std::fs::write(&path, "# a group\ndegree 4\ngen (1 2\n").unwrap();
    let out = conjq(&["classes", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 3"), "{stderr}");
}

#[test]
fn group_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d8.grp");
    std::fs::write(&path, "degree 4\ngen (1 2 3 4)\ngen (2 4)\n").unwrap();
    let v = json_report(&["classes", "--file", path.to_str().unwrap()], 0);
    assert_eq!(v["report"]["group"]["order"], 8);
    assert_eq!(v["report"]["class_count"], 5);
}

#[test]
fn check_reports() {
    let v = json_report(
        &[
            "check",
            "--catalog",
            "symmetric:5",
            "--element",
            "(1 2 3)",
            "--audit",
        ],
        0,
    );
    let r = &v["report"];
    assert_eq!(r["connected_direct"], true);
    assert_eq!(r["connected_criterion"], true);
    assert_eq!(r["hayashi"], true);
    assert_eq!(r["goodness"]["verdict"], "good");
    assert_eq!(r["goodness"]["witnesses"].as_array().unwrap().len(), 20);
    assert_eq!(r["audit"]["ok"], true);

    let v = json_report(
        &["check", "--catalog", "symmetric:4", "--element", "(1 2 3)"],
        0,
    );
    assert_eq!(v["report"]["connected_direct"], false);
    assert_eq!(v["report"]["hayashi"], true);

    let v = json_report(
        &[
            "check",
            "--catalog",
            "cyclic:6",
            "--element",
            "(1 2 3 4 5 6)",
        ],
        0,
    );
    assert_eq!(v["report"]["class_size"], 1);
    assert_eq!(v["report"]["ok"], true);
}

#[test]
fn witness_reports() {
    let v = json_report(
        &[
            "witness",
            "--catalog",
            "symmetric:6",
            "--element",
            "(1 2)(3 4 5)",
            "--audit",
        ],
        0,
    );
    let r = &v["report"];
    assert_eq!(r["transcript"].as_array().unwrap().len(), 5);
    assert_eq!(r["passed"], true);
    assert_eq!(r["bruteforce"]["found"], true);

    let out = conjq(&[
        "witness",
        "--catalog",
        "symmetric:4",
        "--element",
        "(1 2 3)",
    ]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("at least 5"));
}

#[test]
fn product_reports() {
    let v = json_report(
        &["product-check", "symmetric:3@(1 2)", "symmetric:3@(1 2 3)"],
        0,
    );
    assert_eq!(v["report"]["product"]["hayashi"], true);
    let out = conjq(&[
        "product-check",
        "symmetric:5@(1 2)",
        "symmetric:5@(1 2 3)",
        "--bound",
        "150",
    ]);
    assert_eq!(code(&out), 3);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("10") && stderr.contains("20"), "{stderr}");
}

#[test]
fn usage_errors() {
    assert_eq!(code(&conjq(&["survey"])), 2);
    assert_eq!(
        code(&conjq(&[
            "survey",
            "--catalog",
            "cyclic",
            "--max-order",
            "50",
            "--bound",
            "10"
        ])),
        2
    );
    assert_eq!(code(&conjq(&["check", "--catalog", "symmetric:4"])), 2);
    assert_eq!(
        code(&conjq(&[
            "check",
            "--catalog",
            "bogus:4",
            "--element",
            "()"
        ])),
        2
    );
    assert_eq!(
        code(&conjq(&[
            "check",
            "--catalog",
            "symmetric:3",
            "--element",
            "(1 4)"
        ])),
        2
    );
    assert_eq!(
        code(&conjq(&[
            "classes",
            "--catalog",
            "symmetric:9",
            "--bound",
            "1000"
        ])),
        3
    );
}

#[test]
fn survey_is_deterministic_and_valid() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, jobs: &str| -> (String, String) {
        let json = dir.path().join(format!("{name}.json"));
        let csv = dir.path().join(format!("{name}.csv"));
        let out = conjq(&[
            "survey",
            "--catalog",
            "dihedral",
            "--catalog",
            "alternating:5",
            "--catalog",
            "cyclic:2*symmetric:3",
            "--max-order",
            "60",
            "--audit",
            "--seed",
            "7",
            "--jobs",
            jobs,
            "--json",
            json.to_str().unwrap(),
            "--csv",
            csv.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        (read(&json), read(&csv))
    };
    let (json1, csv1) = run("a", "1");
    let (json2, csv2) = run("b", "3");
    assert_eq!(json1, json2);
    assert_eq!(csv1, csv2);

    let v: Value = serde_json::from_str(&json1).unwrap();
    assert!(schema().is_valid(&v));
    let classes: usize = v["report"]["groups"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["classes"].as_array().unwrap().len())
        .sum();
    // one CSV row per (group, class), plus the header
    assert_eq!(csv1.lines().count(), classes + 1);
    assert!(v["report"]["coverage_note"]
        .as_str()
        .unwrap()
        .contains("catalog"));
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}
