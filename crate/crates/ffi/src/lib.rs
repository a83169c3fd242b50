//! C ABI over `hfree`.
//!
//! Graphs and patterns are opaque heap handles released with their `_free`
//! function. Every fallible call returns an [`HfreeStatus`]; on failure the
//! message is available from [`hfree_last_error`] until the next call on the
//! same thread. Vertex ids are 0-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hfree::classify::{verdict, Complexity, KernelStatus};
use hfree::fpt::{solve_hfree, SolverConfig};
use hfree::graph::AlphaSearch;
use hfree::io::{emit_graph, parse_graph};
use hfree::{Error, Graph, HPattern};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfreeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    /// The graph contains the forbidden pattern.
    Violation = 4,
    BudgetExceeded = 5,
    Unsupported = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfreeComplexity {
    Polynomial = 0,
    Fpt = 1,
    W1Hard = 2,
    NpHardOpenFpt = 3,
    Open = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfreeKernel {
    PolyKernel = 0,
    TuringKernelNoPk = 1,
    NoPolyKernel = 2,
    OpenKernel = 3,
}

/// Opaque graph handle.
pub struct HfreeGraph(Graph);

/// Opaque forbidden-pattern handle.
pub struct HfreePattern(HPattern);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HfreeStatus {
    match e {
        Error::Parse(_) => HfreeStatus::Parse,
        Error::Violation(_) => HfreeStatus::Violation,
        Error::Budget(_) => HfreeStatus::BudgetExceeded,
        Error::Unsupported(_) => HfreeStatus::Unsupported,
        Error::Graph(_) | Error::InvalidInput(_) => HfreeStatus::InvalidInput,
        Error::Shortfall { .. } => HfreeStatus::Internal,
    }
}

fn guarded(f: impl FnOnce() -> Result<(), (HfreeStatus, String)>) -> HfreeStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HfreeStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            HfreeStatus::Internal
        }
    }
}

fn fail(e: Error) -> (HfreeStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (HfreeStatus, String) {
    (HfreeStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (HfreeStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (HfreeStatus::InvalidInput, format!("{what} is not UTF-8")))
}

/// Message of the last failed call on this thread, or null. Owned by the library.
#[no_mangle]
pub extern "C" fn hfree_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Edgeless graph on `n` vertices.
#[no_mangle]
pub extern "C" fn hfree_graph_new(n: usize) -> *mut HfreeGraph {
    Box::into_raw(Box::new(HfreeGraph(Graph::new(n))))
}

/// # Safety
/// `graph` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_free(graph: *mut HfreeGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_add_edge(graph: *mut HfreeGraph, u: usize, v: usize) -> HfreeStatus {
    guarded(|| {
        let g = graph.as_mut().ok_or_else(|| null("graph"))?;
        g.0.try_add_edge(u, v).map_err(|e| fail(e.into()))
    })
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_vertex_count(graph: *const HfreeGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_edge_count(graph: *const HfreeGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_has_edge(graph: *const HfreeGraph, u: usize, v: usize) -> bool {
    graph
        .as_ref()
        .is_some_and(|g| u < g.0.n() && v < g.0.n() && g.0.has_edge(u, v))
}

/// Parses the `p`/`e` text format into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_parse(text: *const c_char, out: *mut *mut HfreeGraph) -> HfreeStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(text, "text")?;
        let g = parse_graph(text).map_err(|e| fail(e.into()))?;
        *out = Box::into_raw(Box::new(HfreeGraph(g)));
        Ok(())
    })
}

/// Serializes `graph`; release the string with [`hfree_string_free`].
///
/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hfree_graph_emit(graph: *const HfreeGraph, out: *mut *mut c_char) -> HfreeStatus {
    guarded(|| {
        let g = graph.as_ref().ok_or_else(|| null("graph"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CString::new(emit_graph(&g.0)).map_err(|_| (HfreeStatus::Internal, "NUL in output".into()))?;
        *out = text.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hfree_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a pattern expression such as `C4`, `2K2`, `K5-K2` or `gem`.
///
/// # Safety
/// `expr` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hfree_pattern_parse(expr: *const c_char, out: *mut *mut HfreePattern) -> HfreeStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let expr = read_str(expr, "expr")?;
        let h = HPattern::parse(expr).map_err(fail)?;
        *out = Box::into_raw(Box::new(HfreePattern(h)));
        Ok(())
    })
}

/// # Safety
/// `pattern` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hfree_pattern_free(pattern: *mut HfreePattern) {
    if !pattern.is_null() {
        drop(Box::from_raw(pattern));
    }
}

/// Writes the vertices of `set` to `witness`, which holds `cap` entries.
unsafe fn write_witness(set: &hfree::VertexSet, witness: *mut usize, cap: usize) -> Result<(), (HfreeStatus, String)> {
    let size = set.len();
    if witness.is_null() {
        return Ok(());
    }
    if cap < size {
        return Err((HfreeStatus::BufferTooSmall, format!("witness needs {size} slots, got {cap}")));
    }
    for (i, v) in set.iter().enumerate() {
        *witness.add(i) = v;
    }
    Ok(())
}

/// Independence number by exact search limited to `budget` nodes.
///
/// `witness` may be null; otherwise it receives a maximum independent set.
///
/// # Safety
/// `graph` must be a live handle, `alpha` writable, and `witness` valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn hfree_alpha(
    graph: *const HfreeGraph,
    budget: u64,
    alpha: *mut usize,
    witness: *mut usize,
    cap: usize,
) -> HfreeStatus {
    guarded(|| {
        let g = graph.as_ref().ok_or_else(|| null("graph"))?;
        if alpha.is_null() {
            return Err(null("alpha"));
        }
        let res = AlphaSearch::new(&g.0).budget(budget).run().map_err(|e| fail(e.into()))?;
        *alpha = res.alpha;
        write_witness(&res.witness, witness, cap)
    })
}

/// Decides whether the `pattern`-free `graph` has an independent set of size `k`.
///
/// Fails with `HFREE_STATUS_VIOLATION` when the graph contains the pattern.
/// On success `*found` is set and, if `found`, the set goes to `witness`.
///
/// # Safety
/// Handles must be live, `found` writable, `witness` valid for `cap` writes or null.
#[no_mangle]
pub unsafe extern "C" fn hfree_solve(
    graph: *const HfreeGraph,
    pattern: *const HfreePattern,
    k: usize,
    seed: u64,
    budget: u64,
    found: *mut bool,
    witness: *mut usize,
    cap: usize,
) -> HfreeStatus {
    guarded(|| {
        let g = graph.as_ref().ok_or_else(|| null("graph"))?;
        let h = pattern.as_ref().ok_or_else(|| null("pattern"))?;
        if found.is_null() {
            return Err(null("found"));
        }
        if let Some(emb) = hfree::find_induced(&g.0, &h.0).map_err(|e| fail(e.into()))? {
            return Err(fail(hfree::error::Violation::new(h.0.to_string(), Some(emb)).into()));
        }
        let mut config = SolverConfig::with_seed(seed);
        config.budget = budget;
        match solve_hfree(&g.0, k, &h.0, &config).map_err(fail)? {
            Some(set) => {
                *found = true;
                write_witness(&set, witness, cap)
            }
            None => {
                *found = false;
                Ok(())
            }
        }
    })
}

/// Complexity and kernel status of MIS in `pattern`-free graphs.
///
/// # Safety
/// `pattern` must be a live handle; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn hfree_classify(
    pattern: *const HfreePattern,
    complexity: *mut HfreeComplexity,
    kernel: *mut HfreeKernel,
) -> HfreeStatus {
    guarded(|| {
        let h = pattern.as_ref().ok_or_else(|| null("pattern"))?;
        if complexity.is_null() || kernel.is_null() {
            return Err(null("output"));
        }
        let v = verdict(&h.0);
        *complexity = match v.complexity {
            Complexity::Polynomial => HfreeComplexity::Polynomial,
            Complexity::Fpt => HfreeComplexity::Fpt,
            Complexity::W1Hard => HfreeComplexity::W1Hard,
            Complexity::NpHardOpenFpt => HfreeComplexity::NpHardOpenFpt,
            Complexity::Open => HfreeComplexity::Open,
        };
        *kernel = match v.kernel {
            KernelStatus::PolyKernel => HfreeKernel::PolyKernel,
            KernelStatus::TuringKernelNoPk => HfreeKernel::TuringKernelNoPk,
            KernelStatus::NoPolyKernel => HfreeKernel::NoPolyKernel,
            KernelStatus::OpenKernel => HfreeKernel::OpenKernel,
        };
        Ok(())
    })
}
