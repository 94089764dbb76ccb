use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twisted-weyl"))
        .args(args)
        .env_remove("TWISTED_WEYL_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn rank_one_character() {
    let out = stdout(&["char", "--type", "A2~2", "--lambda", "-2", "--sigma", "id", "--format", "text"]);
    assert_eq!(out, "x^-2 + 1 + x^2\n");
}

#[test]
fn g2_second_sequence_as_json() {
    let out = stdout(&["betas", "--type", "D4~3", "--i", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[0]["re"], serde_json::json!([0, -1]));
    assert_eq!(rows[0]["deg"], 3);
}

#[test]
fn a4_dimension() {
    assert_eq!(stdout(&["dim", "--type", "A2n~2:2", "--lambda", "-1,0", "--sigma", "id"]), "5\n");
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["dim", "--type", "D3~2", "--lambda", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("coordinate 2"));

    let out = run(&["dim", "--type", "Z9~9", "--lambda", "-1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["dim", "--type", "D3~2", "--lambda", "-1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["decompose", "--type", "D3~2", "--lambda", "-1,0", "--i", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_reduced_word_is_canonicalized_with_a_note() {
    let out = run(&["dim", "--type", "D3~2", "--lambda", "-1,0", "--sigma", "s1 s1 s2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not reduced"));
}

#[test]
fn graph_exports() {
    let dot = stdout(&["tqbg", "--type", "D3~2", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 22);
    let json = stdout(&["tqbg", "--type", "D3~2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 22);
}

#[test]
fn output_is_independent_of_thread_count() {
    let args = ["char", "--type", "D4~3", "--lambda", "-1,-1", "--sigma", "s1 s2", "--format", "json"];
    let one = stdout(&[&args[..], &["--threads", "1"]].concat());
    let four = stdout(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one, four);
    let out = Command::new(env!("CARGO_BIN_EXE_twisted-weyl"))
        .args(args)
        .env("TWISTED_WEYL_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), one);
}

#[test]
fn macdonald_methods_agree() {
    let a = stdout(&["macdonald", "--type", "D3~2", "--lambda", "-1,-1", "--spec", "inf", "--method", "reversed"]);
    let b = stdout(&["macdonald", "--type", "D3~2", "--lambda", "-1,-1", "--spec", "inf", "--method", "w0"]);
    assert_eq!(a, b);
    let t0 = stdout(&["macdonald", "--type", "D3~2", "--lambda", "-1,0", "--spec", "0"]);
    let ch = stdout(&["char", "--type", "D3~2", "--lambda", "-1,0"]);
    assert_eq!(t0, ch);
}

#[test]
fn selftest_has_no_unexpected_failures() {
    let out = stdout(&["selftest"]);
    assert!(!out.contains("FAIL"));
    assert_eq!(out.matches("KNOWN").count(), 4);
}
