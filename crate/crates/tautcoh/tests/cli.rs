//! End-to-end tests of the binary: config handling, report shape, output
//! determinism, and the exit code contract (0 ok, 1 usage, 2 failed checks).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tautcoh::{render_json, Report};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tautcoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn write_config(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).expect("config written");
    path
}

fn k3_config(dir: &Path) -> PathBuf {
    write_config(
        dir,
        "k3.json",
        r#"{
  "surface": {"name": "K3", "bundles": {"L": {"h": [8]}, "L2": {"h": [26]}}},
  "query": {"mode": "s2_n2"}
}"#,
    )
}

fn compute_json(config: &Path, extra: &[&str]) -> (Output, String) {
    let mut args = vec!["compute", "--config", config.to_str().unwrap(), "--format", "json"];
    args.extend_from_slice(extra);
    let out = run(&args);
    let text = stdout_of(&out);
    (out, text)
}

#[test]
fn s2_n2_on_k3_reports_the_decomposition() {
    let dir = tempfile::tempdir().unwrap();
    let config = k3_config(dir.path());
    let (out, json) = compute_json(&config, &[]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let report: Report = serde_json::from_str(&json).expect("report parses");
    assert_eq!(report.mode, "s2_n2");
    assert_eq!(report.surface.as_deref(), Some("K3"));
    assert_eq!(report.n, Some(2));
    assert!(!report.conjectural);
    let d = report.decomposition.as_ref().expect("decomposition present");
    assert_eq!(d.total, vec![36, 0, 26]);
    assert_eq!(d.summands.len(), 2);
}

#[test]
fn json_output_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let config = k3_config(dir.path());
    let (first, json_a) = compute_json(&config, &[]);
    let (second, json_b) = compute_json(&config, &[]);
    assert!(first.status.success() && second.status.success());
    assert_eq!(json_a, json_b, "two runs must print identical bytes");
    let report: Report = serde_json::from_str(&json_a).unwrap();
    assert_eq!(render_json(&report), json_a, "parse and re-render is the identity");
}

#[test]
fn text_format_prints_the_degree_table() {
    let dir = tempfile::tempdir().unwrap();
    let config = k3_config(dir.path());
    let out = run(&["compute", "--config", config.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("mode: s2_n2"), "got: {text}");
    assert!(text.contains("surface: K3"));
    assert!(text.contains("total"));
}

#[test]
fn cli_flags_override_the_config_query() {
    let dir = tempfile::tempdir().unwrap();
    let config = k3_config(dir.path());
    // Same config, different mode and n from the command line.
    let (out, json) = compute_json(&config, &["--mode", "s2_conjecture", "--n", "5"]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let report: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(report.mode, "s2_conjecture");
    assert_eq!(report.n, Some(5));
    assert!(report.conjectural);
    assert!(json.contains("\"conjectural\": true"));

    let text_out = run(&[
        "compute",
        "--config",
        config.to_str().unwrap(),
        "--mode",
        "s2_conjecture",
        "--n",
        "5",
    ]);
    assert!(stdout_of(&text_out).contains("CONJECTURAL"));
}

#[test]
fn p2_shortcut_drives_the_twisted_modes() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "p2.json",
        r#"{
  "surface": {"p2": {"d": 1, "e": 1}},
  "query": {"mode": "sections_twisted", "n": 2}
}"#,
    );
    let (out, json) = compute_json(&config, &[]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let report: Report = serde_json::from_str(&json).unwrap();
    let d = report.decomposition.as_ref().unwrap();
    assert_eq!(d.total, vec![36]);
    let kernel = report.kernel.as_ref().expect("kernel summary present");
    assert_eq!(kernel.domain_dim, 30);
    assert_eq!(kernel.rank, 15);
    assert_eq!(kernel.kernel_dim, 15);

    let (out, json) = compute_json(&config, &["--mode", "euler_K"]);
    assert!(out.status.success());
    let report: Report = serde_json::from_str(&json).unwrap();
    let residual = report.residual.as_ref().unwrap();
    assert_eq!(residual.euler, 15);
    assert_eq!(residual.upper_bounds, None);
}

#[test]
fn twisted_bounds_from_dimension_data_alone() {
    let dir = tempfile::tempdir().unwrap();
    // K3 with the trivial twist written out degreewise: no bases, so only
    // the Euler characteristic and the envelope are available.
    let config = write_config(
        dir.path(),
        "k3_twist.json",
        r#"{
  "surface": {
    "name": "K3",
    "bundles": {
      "A": {"h": [1, 0, 1]},
      "LA": {"h": [8]},
      "L2A": {"h": [26]},
      "L2A2": {"h": [26]}
    }
  },
  "query": {"mode": "twisted_bounds", "n": 2}
}"#,
    );
    let (out, json) = compute_json(&config, &[]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let report: Report = serde_json::from_str(&json).unwrap();
    let residual = report.residual.as_ref().unwrap();
    assert_eq!(residual.euler, 26);
    assert_eq!(residual.upper_bounds, Some(vec![26, 26, 26]));
    assert_eq!(residual.exact, None);
    assert!(!json.contains("\"exact\""), "unforced dims must be omitted");

    let text_out = run(&["compute", "--config", config.to_str().unwrap()]);
    assert!(stdout_of(&text_out).contains("not forced at dimension level"));
}

#[test]
fn sk_taut_falls_back_to_the_untwisted_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "custom.json",
        r#"{
  "surface": {"hO": [1, 2, 1], "bundles": {"L": {"h": [2]}}},
  "query": {"mode": "sk_taut", "n": 3, "k": 1}
}"#,
    );
    let (out, json) = compute_json(&config, &[]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let report: Report = serde_json::from_str(&json).unwrap();
    // S^2 of [1,2,1] is [1,2,2,2,1]; tensoring with [2] doubles it.
    assert_eq!(report.decomposition.unwrap().total, vec![2, 4, 4, 4, 2]);
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = k3_config(dir.path());
    let (_, on_stdout) = compute_json(&config, &[]);
    let report_path = dir.path().join("report.json");
    let out = run(&[
        "compute",
        "--config",
        config.to_str().unwrap(),
        "--format",
        "json",
        "--output",
        report_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "", "nothing on stdout when writing a file");
    let written = std::fs::read_to_string(&report_path).unwrap();
    assert_eq!(written, on_stdout);
}

#[test]
fn usage_errors_exit_with_code_1() {
    let dir = tempfile::tempdir().unwrap();

    // Config file that does not exist.
    let out = run(&["compute", "--config", "/nonexistent/config.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("reading config"));

    // Config that is not valid JSON.
    let bad = write_config(dir.path(), "bad.json", "{ not json");
    let out = run(&["compute", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("parsing config"));

    // Unknown mode string.
    let config = k3_config(dir.path());
    let out = run(&["compute", "--config", config.to_str().unwrap(), "--mode", "bogus"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("unknown mode"));

    // No mode anywhere.
    let modeless = write_config(
        dir.path(),
        "modeless.json",
        r#"{"surface": {"name": "K3", "bundles": {"L": {"h": [8]}, "L2": {"h": [26]}}}}"#,
    );
    let out = run(&["compute", "--config", modeless.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("no mode given"));

    // Surface missing a slot the mode needs.
    let slotless = write_config(
        dir.path(),
        "slotless.json",
        r#"{"surface": {"hO": [1]}, "query": {"mode": "s2_n2"}}"#,
    );
    let out = run(&["compute", "--config", slotless.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // Parameter out of the documented range.
    let out = run(&["compute", "--config", config.to_str().unwrap(), "--k", "2", "--mode", "sk_taut", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));

    // Unknown output format.
    let out = run(&["compute", "--config", config.to_str().unwrap(), "--format", "yaml"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("unknown format"));

    // Clap-level usage error.
    let out = run(&["compute", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));

    // Unknown suite on the check subcommand.
    let out = run(&["check", "--suite", "huge"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("unknown suite"));
}

#[test]
fn help_and_version_exit_0() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("compute"));
    assert!(stdout_of(&out).contains("check"));

    let out = run(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_subcommand_runs_the_default_suite_green() {
    let out = run(&["check"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("suite: default"), "got: {text}");
    assert!(text.contains("0 failed"), "got: {text}");
    assert!(!text.contains("FAIL"), "got: {text}");
}

#[test]
fn check_mode_is_reachable_through_compute() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "check.json",
        r#"{"query": {"mode": "check", "suite": "default"}}"#,
    );
    let (out, json) = compute_json(&config, &[]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let report: Report = serde_json::from_str(&json).unwrap();
    let checks = report.checks.as_ref().expect("checks present");
    assert_eq!(checks.suite, "default");
    assert_eq!(checks.failed, 0);
    assert!(checks.total > 0 && checks.passed == checks.total);
}
