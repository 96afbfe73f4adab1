//! Black-box tests of the `infon` binary: stream separation, exit codes,
//! and output formats.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_infon"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("piped stdin")
        .write_all(stdin.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary exits")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("binary is not signal-killed")
}

#[test]
fn eval_reads_stdin_and_prints_results() {
    let out = run(&["eval"], "3_4 * 4_5\n");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "12_20\n");
    assert_eq!(stderr(&out), "");
}

#[test]
fn eval_keeps_bindings_across_lines() {
    let source = "let A = 3_4\nlet B = 4_5\nA * B\norder(A * B)\niden(A, A)\niden(A, 3_4)\n";
    let out = run(&["eval"], source);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "12_20\n20\ntrue\nfalse\n");
}

#[test]
fn syntax_errors_exit_3_with_a_caret() {
    let out = run(&["eval"], "3_4 *\n");
    assert_eq!(code(&out), 3);
    assert_eq!(stdout(&out), "");
    let err = stderr(&out);
    assert!(err.contains("error (line 1)"), "stderr: {err}");
    assert!(err.contains('^'), "stderr: {err}");
}

#[test]
fn evaluation_errors_exit_4() {
    let out = run(&["eval"], "1_2 + 1_3\n");
    assert_eq!(code(&out), 4);
    assert!(stderr(&out).contains("orders 2 and 3 differ"));
}

#[test]
fn errors_point_at_the_right_line() {
    let out = run(&["eval"], "let A = 3_4\nA * missing\n");
    assert_eq!(code(&out), 4);
    assert!(stderr(&out).contains("error (line 2)"));
}

#[test]
fn unreadable_files_exit_2() {
    let out = run(&["eval", "/no/such/file.infon"], "");
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("cannot read"));
}

#[test]
fn repl_lists_bindings_and_quits() {
    let out = run(&["repl"], "let A = 3_4 * 4_5\n:env\nA\n:quit\n");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "A = 12_20\n12_20\n");
    assert!(stderr(&out).contains("> "), "prompt goes to stderr");
}

#[test]
fn repl_survives_errors() {
    let out = run(&["repl"], "3_4 +\nlet A = 1_2\nA\n");
    assert_eq!(code(&out), 0, "EOF after an error still exits cleanly");
    assert_eq!(stdout(&out), "1_2\n");
    assert!(stderr(&out).contains("expected an expression"));
}

#[test]
fn check_defaults_succeed() {
    let out = run(&["check", "--max-order", "4"], "");
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("property=Distribution verdict=HoldsConditionally"));
    assert!(text.contains("checked 17 properties: 16 Holds, 1 HoldsConditionally, 0 Fails, 0 Error"));
}

#[test]
fn check_json_is_parseable_and_deterministic() {
    let args = &["check", "--max-order", "4", "--format", "json"];
    let first = run(args, "");
    assert_eq!(code(&first), 0);
    for line in stdout(&first).lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("JSON per line");
        assert_eq!(v["elapsed_ms"], 0);
    }
    let second = run(args, "");
    assert_eq!(first.stdout, second.stdout, "byte-identical across runs");
}

#[test]
fn check_rejects_unknown_properties() {
    let out = run(&["check", "--property", "NoSuchLaw"], "");
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown property"));
}

#[test]
fn check_surfaces_unmeetable_budgets_as_failures() {
    let out = run(
        &["check", "--max-order", "16", "--budget", "3", "--property", "CommutativityMul"],
        "",
    );
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("verdict=Error"));
}

#[test]
fn check_timings_go_to_stderr_only() {
    let out = run(
        &["check", "--max-order", "3", "--timings", "--property", "Sibling"],
        "",
    );
    assert_eq!(code(&out), 0);
    assert!(!stdout(&out).contains("timing:"));
    assert!(stderr(&out).contains("timing: Sibling"));
}

#[test]
fn explain_describes_each_property() {
    let one = run(&["explain", "Distribution"], "");
    assert_eq!(code(&one), 0);
    assert!(stdout(&one).contains("HoldsConditionally"));
    let all = run(&["explain"], "");
    assert_eq!(code(&all), 0);
    for name in ["CommutativityMul", "Sibling", "ExcludedMiddle"] {
        assert!(stdout(&all).contains(name));
    }
    let bad = run(&["explain", "Gibberish"], "");
    assert_eq!(code(&bad), 2);
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["no-such-subcommand"], "");
    assert_eq!(code(&out), 2);
}
