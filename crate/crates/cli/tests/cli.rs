use std::path::PathBuf;
use std::process::{Command, Output};

fn formwidth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_formwidth"))
        .args(args)
        .env("FORMWIDTH_LOG", "warn")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden_path() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data/appendix_b.txt")
        .to_string_lossy()
        .into_owned()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn fw_text_and_json() {
    let out = formwidth(&["fw", "12121"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "fw=4\n");

    let out = formwidth(&["--format", "json", "fw", "12121", "--naive"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["fw"], 4);
    assert_eq!(v["nodes_visited"], 9);
    assert_eq!(v["levels"], serde_json::json!([1, 2, 4, 2]));
    assert_eq!(v["naive_nodes"], 15);
}

#[test]
fn spaced_input_with_large_letters() {
    let out = formwidth(&["fw", "10 20 10 20 10"]);
    assert_eq!(stdout(&out), "fw=4\n");
}

#[test]
fn contains_and_alt() {
    assert_eq!(stdout(&formwidth(&["contains", "1221", "121"])), "true\n");
    assert_eq!(stdout(&formwidth(&["contains", "1212", "1221"])), "false\n");
    assert_eq!(stdout(&formwidth(&["alt", "12121"])), "alt=5\n");
    let v = json(&formwidth(&["alt", "1233121", "--format", "json"]));
    assert_eq!(v["alternation_length"], 5);
}

#[test]
fn fl_reports_and_caps() {
    let out = formwidth(&["fl", "12121"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "fl=2 fw=4\n");

    let out = formwidth(&["fl", "12121", "--budget", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).starts_with("fl=unresolved"));
}

#[test]
fn classify_first_and_verbose() {
    let out = formwidth(&["classify", "12121"]);
    assert_eq!(stdout(&out), "F01 n=2 reversed=false\n");
    let out = formwidth(&["classify", "12121", "--verbose"]);
    assert!(stdout(&out).lines().count() > 1);
    let out = formwidth(&["classify", "1234"]);
    assert_eq!(stdout(&out), "none\n");
    let v = json(&formwidth(&["--format", "json", "classify", "12121"]));
    assert_eq!(v["match"]["family"], "F01");
}

#[test]
fn enumerate_matches_golden() {
    let out = formwidth(&["enumerate", "--letters", "4", "--golden", &golden_path()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 31);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
}

#[test]
fn enumerate_reports_golden_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wrong.txt");
    std::fs::write(&path, "12121\n\n1233121\n").unwrap();
    let out = formwidth(&[
        "enumerate",
        "--letters",
        "3",
        "--golden",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("golden mismatch"));
}

#[test]
fn json_is_identical_across_thread_counts() {
    let one = formwidth(&[
        "--format",
        "json",
        "--threads",
        "1",
        "enumerate",
        "--letters",
        "4",
    ]);
    let many = formwidth(&[
        "--format",
        "json",
        "--threads",
        "4",
        "enumerate",
        "--letters",
        "4",
    ]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(json(&one)["count"], 31);
}

#[test]
fn verify_theorem_small_passes() {
    let out = formwidth(&[
        "verify-theorem",
        "--max-letters",
        "3",
        "--golden",
        &golden_path(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("PASS\n"));
}

#[test]
fn verify_theorem_reports_four_letter_gap() {
    // Two four-letter sequences in the golden list are produced by no family.
    let out = formwidth(&[
        "verify-theorem",
        "--max-letters",
        "5",
        "--golden",
        &golden_path(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("enumerated but in no family: 123143241"));
    assert!(text.contains("enumerated but in no family: 123421431"));
    assert!(!text.contains("golden=MISMATCH"));
    assert!(text.ends_with("FAIL\n"));
}

#[test]
fn ex_exact_and_capped() {
    let out = formwidth(&["ex", "--pattern", "1212", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("Ex(1212, 3) = 5 "));

    let out = formwidth(&["ex", "--pattern", "12121", "--n", "4", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("budget exhausted"));

    let v = json(&formwidth(&[
        "--format",
        "json",
        "ex",
        "--pattern",
        "121",
        "--n",
        "4",
    ]));
    assert_eq!(v["value"], 4);
    assert_eq!(v["cap_hit"], false);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["fw", "1a2"][..],
        &["fw", "102"][..],
        &["enumerate", "--letters", "1"][..],
        &["--threads", "0", "fw", "12"][..],
        &["ex", "--pattern", "121", "--n", "0"][..],
        &[
            "enumerate",
            "--letters",
            "3",
            "--golden",
            "/nonexistent/file",
        ][..],
        &["frobnicate"][..],
        &[][..],
    ] {
        let out = formwidth(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn run_writes_to_the_given_sink() {
    let mut buf = Vec::new();
    let code = formwidth_cli::run(["formwidth", "fw", "121212"], &mut buf);
    assert_eq!(code, formwidth_cli::EXIT_OK);
    assert_eq!(String::from_utf8(buf).unwrap(), "fw=5\n");
}
