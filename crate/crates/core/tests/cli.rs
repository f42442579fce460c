use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_autotopism")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("autotopism-cli-{}-{name}", std::process::id()))
}

#[test]
fn witness_then_verify() {
    let path = scratch("witness.txt");
    let p = path.to_str().unwrap();
    let o = run(&["witness", "--alpha", "3.2.1", "--beta", "6", "--gamma", "6", "-o", p]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["verify", p, "--alpha", "(1 2 3)(4 5)", "--beta", "(1 2 3 4 5 6)", "--gamma", "(1 2 3 4 5 6)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "AUTOTOPISM");
    let o = run(&["verify", p, "--alpha", "(1 2)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("NOT AUTOTOPISM"));
    std::fs::remove_file(path).ok();
}

#[test]
fn classify_exit_codes() {
    assert_eq!(run(&["classify", "--alpha", "3^2"]).status.code(), Some(0));
    let o = run(&["classify", "--alpha", "2^3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("NONMEMBER"));
    assert_eq!(run(&["classify", "--alpha", "3.x"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--alpha", "3", "--beta", "2"]).status.code(), Some(2));
}

#[test]
fn count_and_table() {
    let o = run(&["count", "--alpha", "1^4", "--beta", "1^4", "--gamma", "1^4"]);
    assert_eq!(stdout(&o).trim(), "576");
    let o = run(&["count", "--alpha", "3^2.2^3", "--beta", "3^4", "--gamma", "2^6"]);
    assert_eq!((o.status.code(), stdout(&o).trim().to_string()), (Some(1), "0".to_string()));
    let o = run(&["table", "--order", "4", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2^2"));
    assert_eq!(run(&["table", "--order", "9", "--exhaustive"]).status.code(), Some(2));
}
