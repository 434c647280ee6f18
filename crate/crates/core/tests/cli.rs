use std::process::Command;

use hyperlaplace::cli::{run_from, EXIT_DOMAIN, EXIT_IO, EXIT_OK, EXIT_UNKNOWN_ENTRY, EXIT_USAGE, EXIT_VERIFY_FAILED};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hyperlaplace").chain(args.iter().copied());
    let code = run_from(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("")
}

#[test]
fn list_everything_and_by_section() {
    let (code, out, _) = run(&["list"]);
    assert_eq!(code, EXIT_OK);
    let line = out.lines().find(|l| l.starts_with("novel-V ")).unwrap();
    assert!(line.contains("Eq. (46)"));
    assert!(out.contains("prod-66"));

    let (code, out, _) = run(&["list", "--section", "5"]);
    assert_eq!(code, EXIT_OK);
    let ids: Vec<&str> = out.lines().filter(|l| !l.starts_with(' ')).map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(ids.first(), Some(&"eq-97"));
    assert_eq!(ids.last(), Some(&"eq-116"));
    assert_eq!(ids.len(), 20);

    let (code, out, _) = run(&["list", "--section", "9"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, ""));
}

#[test]
fn eval_values() {
    let (code, out, _) = run(&["eval", "novel-V", "α=0", "β=1", "p=1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(first_line(&out), "1.0");
    let (_, out, _) = run(&["eval", "eq-111", "a=2"]);
    assert_eq!(first_line(&out), "0.7853981633974483");
    let (_, out, _) = run(&["eval", "entry-I", "s=4", "β=1", "ν=1", "m=1"]);
    let v: f64 = first_line(&out).parse().unwrap();
    assert!((v - 7.0 / 12.0).abs() <= 1e-16);
    // ASCII aliases
    let (code, out, _) = run(&["eval", "entry-I", "s=4", "beta=1", "nu=1", "m=1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("conditions: satisfied"));
}

#[test]
fn eval_with_oracle_and_complex_params() {
    let (code, out, _) = run(&["eval", "novel-VII", "a=1", "β=1", "ν=1.5+0.2i", "--oracle"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("oracle = "));
    let diff: f64 = out.lines().find_map(|l| l.strip_prefix("difference = ")).unwrap().parse().unwrap();
    assert!(diff < 1e-9);
}

#[test]
fn eval_errors() {
    let (code, _, err) = run(&["eval", "novel-V", "α=0", "β=1", "p=-1"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("Re(p) > 0"));
    let (code, out, _) = run(&["eval", "eq-115", "a=0", "β=1", "--relaxed"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(first_line(&out), "1.0");
    assert!(out.contains("VIOLATED"));
    assert_eq!(run(&["eval", "no-such", "a=1"]).0, EXIT_UNKNOWN_ENTRY);
    assert_eq!(run(&["eval", "eq-111", "b=1"]).0, EXIT_DOMAIN);
    assert_eq!(run(&["eval", "eq-111", "a"]).0, EXIT_USAGE);
    assert_eq!(run(&["eval", "eq-111", "a=zz"]).0, EXIT_DOMAIN);
}

#[test]
fn expand_forms() {
    let (_, out, _) = run(&["expand", "cos", "2", "1.0"]);
    assert_eq!(first_line(&out), "0.5·cos(2x) + 0.5");
    let (_, out, _) = run(&["expand", "sinh", "3", "1.0"]);
    assert_eq!(first_line(&out), "0.25·sinh(3x) − 0.75·sinh(x)");
    let (code, out, _) = run(&["expand", "sin", "1", "2.0", "--laplace", "s=1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().nth(1), Some("0.4"));
    assert_eq!(run(&["expand", "tan", "2", "1.0"]).0, EXIT_USAGE);
    assert_eq!(run(&["expand", "sin", "0", "1.0"]).0, EXIT_USAGE);
    assert_eq!(run(&["expand", "cosh", "1", "2.0", "--laplace", "s=1"]).0, EXIT_DOMAIN);
}

#[test]
fn verify_runs() {
    let (code, out, _) = run(&["verify", "novel-VI", "--grid", "α=0;β=2", "--tol", "1e-9"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1 pass, 0 fail, 0 skip"));

    let (code, out, err) = run(&["verify", "novel-V", "--grid", "α=0;β=1;p=-1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("0 pass, 0 fail, 1 skip"));
    assert!(err.contains("warning"));

    // a tolerance below what double precision can certify fails honestly
    let (code, _, _) = run(&["verify", "entry-I", "--tol", "1e-17"]);
    assert_eq!(code, EXIT_VERIFY_FAILED);

    assert_eq!(run(&["verify", "nope"]).0, EXIT_UNKNOWN_ENTRY);
    assert_eq!(run(&["verify", "all", "--grid", "a=1"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "eq-111", "--grid", "z=1"]).0, EXIT_DOMAIN);
}

#[test]
fn verify_writes_stable_reports() {
    let dir = std::env::temp_dir().join(format!("hyperlaplace-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.jsonl");
    let p = path.to_str().unwrap();
    assert_eq!(run(&["verify", "eq-115", "--grid", "a=0.5:2.5:5;β=1", "--out", p]).0, EXIT_OK);
    let first = std::fs::read(&path).unwrap();
    assert_eq!(run(&["verify", "eq-115", "--grid", "a=0.5:2.5:5;β=1", "--out", p]).0, EXIT_OK);
    assert_eq!(first, std::fs::read(&path).unwrap());
    let text = String::from_utf8(first).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().skip(1).all(|l| l.contains("\"status\":\"pass\"")));

    let bad = dir.join("missing-dir").join("r.jsonl");
    assert_eq!(run(&["verify", "eq-111", "--out", bad.to_str().unwrap()]).0, EXIT_IO);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hyperlaplace");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code().unwrap();
    assert_eq!(code(&["eval", "eq-111", "a=2"]), EXIT_OK);
    assert_eq!(code(&["eval", "eq-111", "a=-2"]), EXIT_DOMAIN);
    assert_eq!(code(&["eval", "zzz"]), EXIT_UNKNOWN_ENTRY);
    assert_eq!(code(&["frobnicate"]), EXIT_USAGE);
    let out = Command::new(bin).args(["eval", "eq-111", "a=2"]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().next(), Some("0.7853981633974483"));
}
