use std::fs;
use std::path::PathBuf;

use hfree::cli::{run, EXIT_BUDGET, EXIT_INPUT, EXIT_OK};
use hfree::io::parse_graph;

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hfree-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hfree").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const C5: &str = "p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

#[test]
fn oracle_on_c5() {
    let input = scratch("c5.txt", C5);
    let (code, out, _) = call(&["oracle", "--input", input.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("alpha = 2\n"));
}

#[test]
fn oracle_budget_exhaustion() {
    let input = scratch("c5b.txt", C5);
    let (code, _, err) = call(&["oracle", "--input", input.to_str().unwrap(), "--budget", "1"]);
    assert_eq!(code, EXIT_BUDGET);
    assert!(err.contains("budget"));
}

#[test]
fn input_errors() {
    let bad = scratch("loop.txt", "p 2 1\ne 1 1\n");
    let (code, _, err) = call(&["oracle", "--input", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 2"));
    assert_eq!(call(&["oracle", "--input", "/nonexistent/graph"]).0, EXIT_INPUT);
    assert_eq!(call(&["classify", "--pattern", "Q9"]).0, EXIT_INPUT);
    assert_eq!(call(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn solve_rejects_inputs_containing_the_pattern() {
    let p4 = scratch("p4.txt", "p 4 2\ne 1 2\ne 3 4\n");
    let (code, _, err) = call(&["solve", "--input", p4.to_str().unwrap(), "--pattern", "2K2", "--k", "2"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("2K2"));
}

#[test]
fn solve_reports_decision_and_witness() {
    let input = scratch("c5s.txt", C5);
    for (pattern, k, want) in [("gem", 2, "yes"), ("gem", 3, "no"), ("2K2", 2, "yes"), ("K6-K3", 3, "no")] {
        let (code, out, err) = call(&["solve", "--input", input.to_str().unwrap(), "--pattern", pattern, "--k", &k.to_string()]);
        assert_eq!(code, EXIT_OK, "{err}");
        assert!(out.contains(&format!("decision: {want}\n")), "{pattern} {k}: {out}");
        assert!(out.contains("seed: 0\n"));
    }
}

#[test]
fn classify_c4() {
    let (code, out, _) = call(&["classify", "--pattern", "C4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("complexity: W[1]-hard\n"));
    assert!(out.contains("rule: W[1]-hard: not chordal"));
}

#[test]
fn gridtiling_generation() {
    let args = ["generate", "--gridtiling", "k=2", "m=2", "n=2", "--variant", "first", "--p", "1", "--planted", "--seed", "5"];
    let (code, out, _) = call(&args);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("c k'=64\n"));
    let g = parse_graph(&out).unwrap();
    assert_eq!(g.n(), 128);
    assert!(g.labels().is_some());
    assert_eq!(call(&args).1, out, "same seed, same bytes");
    let other = call(&["generate", "--gridtiling", "k=2", "m=2", "n=2", "--planted", "--seed", "6"]).1;
    assert!(other.contains("c seed 6\n"));
}

#[test]
fn or_composition_and_output_file() {
    let a = scratch("a.txt", "p 2 1\ne 1 2\n");
    let b = scratch("b.txt", C5);
    let target = a.with_file_name("composed.txt");
    let (code, out, _) = call(&[
        "generate",
        "--or-compose",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--output",
        target.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let g = parse_graph(&fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (7, 1 + 5 + 2 * 5));
}

#[test]
fn kernel_writes_reduced_instance() {
    let input = scratch("k.txt", C5);
    let (code, out, err) = call(&["kernel", "--input", input.to_str().unwrap(), "--rule", "krfree", "--r", "3", "--k", "2"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(parse_graph(&out).is_ok());
    assert!(out.contains("c k' = 2\n"));
    let (code, out, err) = call(&["kernel", "--input", input.to_str().unwrap(), "--rule", "turing", "--r", "5", "--k", "3"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.ends_with("decision: no\n"));
}

#[test]
fn seeded_runs_are_reproducible() {
    let input = scratch("rep.txt", C5);
    let args = ["solve", "--input", input.to_str().unwrap(), "--pattern", "gem", "--k", "2", "--seed", "41"];
    let first = call(&args);
    assert_eq!(first, call(&args));
    assert!(first.1.contains("seed: 41\n"));
}
