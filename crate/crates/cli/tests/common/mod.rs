#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

pub fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("cases.txt")).expect("cases.txt");
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut words = l.split_whitespace().map(String::from);
            let name = words.next().expect("case name");
            Case { name, args: words.collect() }
        })
        .collect()
}

pub fn run<S: AsRef<str>>(args: &[S]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isotypic"))
        .current_dir(golden_dir())
        .args(args.iter().map(AsRef::as_ref))
        .output()
        .expect("binary runs")
}

pub fn run_with_workers(case: &Case, workers: usize) -> Output {
    let mut args = vec!["--workers".to_string(), workers.to_string()];
    args.extend(case.args.iter().cloned());
    run(&args)
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}
