//! Plumbing of the `modularize` binary: input sources, output sinks, and
//! diagnostics.  The document transformations themselves are covered by the
//! acceptance tests.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_modularize"))
}

#[test]
fn reads_standard_input_when_no_path_is_given() {
    let mut child = bin()
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(fs::read(golden("pair.txt")).unwrap().as_slice())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        fs::read_to_string(golden("pair.out.txt")).unwrap()
    );
}

#[test]
fn a_dash_also_means_standard_input() {
    let mut child = bin()
        .arg("-")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(fs::read(golden("pair.txt")).unwrap().as_slice())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        fs::read_to_string(golden("pair.out.txt")).unwrap()
    );
}

#[test]
fn writes_to_the_output_file() {
    let target = Path::new(env!("CARGO_TARGET_TMPDIR")).join("pair.out.txt");
    let out = bin()
        .arg(golden("pair.txt"))
        .args(["--output", target.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        fs::read_to_string(&target).unwrap(),
        fs::read_to_string(golden("pair.out.txt")).unwrap()
    );
}

#[test]
fn prints_the_search_report_on_stderr() {
    let out = bin()
        .arg(golden("worked.txt"))
        .arg("--stats")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stderr).unwrap(),
        "d: 3 disjunctions, 6 cases -> 2 subgroups (6 = 2 x 3); \
         tested 3 bipartitions, 6 confinements\n    \
         d.1 = {2}, 2 cases\n    \
         d.2 = {1 3}, 3 cases\n"
    );
    // The document itself still goes to standard output.
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        fs::read_to_string(golden("worked.out.txt")).unwrap()
    );
}

#[test]
fn diagnoses_parse_errors_with_their_position() {
    let out = bin().arg(golden("syntax-error.txt")).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("syntax-error.txt"),
        "no source in: {stderr}"
    );
    assert!(
        stderr.contains("line 3, column 1"),
        "no position in: {stderr}"
    );
}

#[test]
fn missing_input_is_an_io_failure() {
    let out = bin().arg(golden("no-such-file.txt")).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}
