use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use hfree_ffi::*;

fn pattern(expr: &str) -> *mut HfreePattern {
    let expr = CString::new(expr).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hfree_pattern_parse(expr.as_ptr(), &mut out) }, HfreeStatus::Ok);
    out
}

fn cycle(n: usize) -> *mut HfreeGraph {
    let g = hfree_graph_new(n);
    for v in 0..n {
        assert_eq!(unsafe { hfree_graph_add_edge(g, v, (v + 1) % n) }, HfreeStatus::Ok);
    }
    g
}

#[test]
fn build_and_query() {
    let g = cycle(5);
    unsafe {
        assert_eq!(hfree_graph_vertex_count(g), 5);
        assert_eq!(hfree_graph_edge_count(g), 5);
        assert!(hfree_graph_has_edge(g, 4, 0));
        assert!(!hfree_graph_has_edge(g, 0, 2));
        assert!(!hfree_graph_has_edge(g, 0, 99));
        assert_eq!(hfree_graph_add_edge(g, 1, 1), HfreeStatus::InvalidInput);
        assert!(CStr::from_ptr(hfree_last_error()).to_str().unwrap().contains("self-loop"));
        assert_eq!(hfree_graph_add_edge(g, 0, 9), HfreeStatus::InvalidInput);
        hfree_graph_free(g);
    }
}

#[test]
fn text_round_trip() {
    let text = CString::new("p 3 2\ne 1 2\ne 3 2\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(hfree_graph_parse(text.as_ptr(), &mut g), HfreeStatus::Ok);
        let mut emitted = ptr::null_mut();
        assert_eq!(hfree_graph_emit(g, &mut emitted), HfreeStatus::Ok);
        assert_eq!(CStr::from_ptr(emitted).to_str().unwrap(), "p 3 2\ne 1 2\ne 2 3\n");
        hfree_string_free(emitted);
        hfree_graph_free(g);

        let bad = CString::new("p 2 1\ne 2 2\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(hfree_graph_parse(bad.as_ptr(), &mut g), HfreeStatus::Parse);
        assert!(g.is_null());
        assert!(CStr::from_ptr(hfree_last_error()).to_str().unwrap().starts_with("line 2"));
    }
}

#[test]
fn alpha_and_budget() {
    let g = cycle(7);
    let mut alpha = 0;
    let mut witness = [usize::MAX; 7];
    unsafe {
        assert_eq!(hfree_alpha(g, 1 << 20, &mut alpha, witness.as_mut_ptr(), 7), HfreeStatus::Ok);
        assert_eq!(alpha, 3);
        let set = &witness[..3];
        assert!(set.iter().all(|&u| set.iter().all(|&v| u == v || !hfree_graph_has_edge(g, u, v))));
        assert_eq!(hfree_alpha(g, 1 << 20, &mut alpha, witness.as_mut_ptr(), 2), HfreeStatus::BufferTooSmall);
        assert_eq!(hfree_alpha(g, 1, &mut alpha, ptr::null_mut(), 0), HfreeStatus::BudgetExceeded);
        assert!(!hfree_last_error().is_null());
        assert_eq!(hfree_alpha(ptr::null(), 1, &mut alpha, ptr::null_mut(), 0), HfreeStatus::NullPointer);
        hfree_graph_free(g);
    }
}

#[test]
fn solve_checks_the_promise() {
    let c5 = cycle(5);
    let gem = pattern("gem");
    let two_k2 = pattern("2K2");
    let mut found = false;
    let mut witness = [0usize; 5];
    unsafe {
        assert_eq!(hfree_solve(c5, gem, 2, 3, 1 << 24, &mut found, witness.as_mut_ptr(), 5), HfreeStatus::Ok);
        assert!(found);
        assert!(!hfree_graph_has_edge(c5, witness[0], witness[1]));
        assert_eq!(hfree_solve(c5, gem, 3, 3, 1 << 24, &mut found, ptr::null_mut(), 0), HfreeStatus::Ok);
        assert!(!found);

        let c6 = cycle(6);
        assert_eq!(hfree_solve(c6, two_k2, 2, 0, 1 << 24, &mut found, ptr::null_mut(), 0), HfreeStatus::Violation);
        let bad = CString::new("not a pattern").unwrap();
        let mut p = ptr::null_mut();
        assert_eq!(hfree_pattern_parse(bad.as_ptr(), &mut p), HfreeStatus::InvalidInput);
        hfree_graph_free(c6);
        hfree_graph_free(c5);
        hfree_pattern_free(gem);
        hfree_pattern_free(two_k2);
    }
}

#[test]
fn classify_patterns() {
    let cases = [
        ("C4", HfreeComplexity::W1Hard, HfreeKernel::NoPolyKernel),
        ("paw", HfreeComplexity::Fpt, HfreeKernel::PolyKernel),
        ("K3|K1", HfreeComplexity::Fpt, HfreeKernel::TuringKernelNoPk),
        ("P4", HfreeComplexity::Polynomial, HfreeKernel::PolyKernel),
    ];
    for (expr, want_c, want_k) in cases {
        let p = pattern(expr);
        let mut c = HfreeComplexity::Open;
        let mut k = HfreeKernel::OpenKernel;
        unsafe {
            assert_eq!(hfree_classify(p, &mut c, &mut k), HfreeStatus::Ok);
            hfree_pattern_free(p);
        }
        assert_eq!((c, k), (want_c, want_k), "{expr}");
    }
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hfree.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for symbol in ["hfree_graph_new", "hfree_solve", "hfree_classify", "HFREE_STATUS_BUDGET_EXCEEDED", "typedef struct HfreeGraph HfreeGraph"] {
        assert!(text.contains(symbol), "{symbol} missing from header");
    }
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let probe = dir.join("probe.c");
    std::fs::write(
        &probe,
        "#include \"hfree.h\"\nint main(void) { HfreeGraph *g = hfree_graph_new(3); HfreeStatus s = hfree_graph_add_edge(g, 0, 1); hfree_graph_free(g); return s; }\n",
    )
    .unwrap();
    let status = Command::new("cc")
        .arg("-fsyntax-only")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(header.parent().unwrap())
        .arg(&probe)
        .status()
        .expect("a C compiler on PATH");
    assert!(status.success());
}
