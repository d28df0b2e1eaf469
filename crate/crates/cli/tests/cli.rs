use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn spd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spd")).args(args).output().unwrap()
}

fn spd_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

const SIX_CROSS: &str = "[[1,1],[1,2],[1,5],[2,2],[2,3],[3,3]]";

#[test]
fn gen_canonical_diagram() {
    let v = json(&spd(&["gen", "dw", "--n", "3", "--w", "-3,-2,1"]));
    assert_eq!(v, serde_json::json!([{"n": 3, "cells": [[3, 3], [2, 2], [1, 2], [1, 1]]}]));
}

#[test]
fn gen_sets() {
    let closure = json(&spd(&["gen", "closure", "--n", "3", "--w", "-3,-2,1"]));
    assert_eq!(closure.as_array().unwrap().len(), 6);
    let mitosis = json(&spd(&["gen", "mitosis", "--n", "3", "--word", "2,1,3,2,1"]));
    assert_eq!(mitosis, closure);
    let by_element = json(&spd(&["gen", "mitosis", "--n", "3", "--w", "-3,-2,1"]));
    assert_eq!(by_element, closure);
    let rsp = json(&spd(&["gen", "rsp", "--n", "2", "--w", "-2,1"]));
    assert_eq!(rsp.as_array().unwrap().len(), 2);
}

#[test]
fn gen_guards_and_errors() {
    let out = spd(&["gen", "rsp", "--n", "5", "--w", "1,2,3,4,5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("brute-force"));
    assert_eq!(spd(&["gen", "dw", "--n", "3", "--w", "1,1,2"]).status.code(), Some(2));
    assert_eq!(spd(&["gen", "dw", "--n", "3", "--w", "1,2"]).status.code(), Some(2));
    assert_eq!(spd(&["gen", "dw", "--n", "3"]).status.code(), Some(2));
    assert_eq!(spd(&["gen", "dw", "--n", "2", "--word", "1,1"]).status.code(), Some(0));
    assert_eq!(spd(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn trace_summaries() {
    let v = json(&spd(&["trace", "--n", "3", "--cells", SIX_CROSS]));
    assert_eq!(v["w_D"], "-3,1,2");
    assert_eq!(v["v_D"], serde_json::json!([2, 3, 1]));
    assert_eq!(v["reduced"], true);

    let full = json(&spd(&["trace", "--n", "2", "--cells", "[[1,1],[1,2],[1,3],[2,2]]"]));
    assert_eq!(full["w_D"], "1,2");
    assert_eq!(full["signs"], serde_json::json!([1, 1]));

    let empty = json(&spd_stdin(&["trace"], r#"{"n":2,"cells":[]}"#));
    assert_eq!(empty["w_D"], "-1,-2");
    assert_eq!(empty["signs"], serde_json::json!([0, 0]));

    assert_eq!(spd(&["trace", "--n", "2", "--cells", "[[3,3]]"]).status.code(), Some(2));
    assert_eq!(spd(&["trace", "--n", "2", "--cells", "[[1,"]).status.code(), Some(2));
}

#[test]
fn gen_output_feeds_trace() {
    let v = json(&spd(&["gen", "dw", "--n", "3", "--w", "-3,-2,1"]));
    let t = json(&spd_stdin(&["trace"], &v[0].to_string()));
    assert_eq!(t["w_D"], "-3,-2,1");
}

#[test]
fn drawings() {
    let out = spd(&["draw", "--n", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.chars().filter(|c| !c.is_whitespace()).count(), 10);
    assert!(!text.contains('+'));

    let out = spd(&["draw", "--n", "2", "--cells", "[[1,1],[1,2],[1,3],[2,2]]"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().matches('+').count(), 4);

    let out = spd(&["draw", "--n", "3", "--cells", SIX_CROSS, "--format", "tikz"]);
    let tikz = String::from_utf8(out.stdout).unwrap();
    assert!(tikz.starts_with("\\begin{tikzpicture}"));
    assert_eq!(tikz.matches("% cross").count(), 6);
}

#[test]
fn verify_reports() {
    let out = spd(&["verify", "--suite", "thm1", "--n", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("suite thm1 n=2 profile=fast: cases=8"));

    let out = spd(&["verify", "--suite", "polytope", "--n", "2", "--lambda", "1,1"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("cases=1 "));

    assert_eq!(spd(&["verify", "--n", "4"]).status.code(), Some(2));
    assert_eq!(spd(&["verify", "--n", "6", "--profile", "full"]).status.code(), Some(2));
    assert_eq!(spd(&["verify", "--suite", "polytope", "--n", "2", "--lambda", "-1,0"]).status.code(), Some(2));
}

#[test]
fn verify_failure_exit_code() {
    // the single-diagram conditions are not sufficient at rank 4
    let out = spd(&["verify", "--suite", "lemmas", "--n", "4", "--profile", "full"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL unique closure w=-1,4,-3,-2"));
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_spd"))
            .args(["verify", "--n", "3"])
            .env("SPD_THREADS", threads)
            .output()
            .unwrap()
    };
    let (one, two) = (run("1"), run("2"));
    assert!(one.status.success());
    assert_eq!(one.stdout, two.stdout);
    assert_eq!(run("many").status.code(), Some(2));
}
