//! C ABI for `pathcover`.
//!
//! Graphs and covers are opaque handles created by `pc_*` functions and
//! released with `pc_graph_free` / `pc_cover_free`. Every fallible call
//! returns a [`PcStatus`]; on failure a description is available from
//! `pc_last_error_message` on the same thread. Outputs are written only on
//! success.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pathcover::solvers::{exact_max_cover_with_limit, solve, theoretical_ratio, Algorithm};
use pathcover::{generate, Cover, Error, Graph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidGraph = 3,
    Io = 4,
    TooLarge = 5,
    Panic = 6,
}

/// Selects Approx1 in `pc_solve`.
pub const PC_ALGORITHM_APPROX1: u32 = 1;
/// Selects Approx2 (k = 4 only) in `pc_solve`.
pub const PC_ALGORITHM_APPROX2: u32 = 2;

/// Opaque graph handle.
pub struct PcGraph(Graph);

/// Opaque cover handle: vertex-disjoint paths.
pub struct PcCover(Cover);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(PcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } | Error::SelfLoop(_) | Error::DuplicateEdge(..) | Error::EdgeOutOfRange { .. } => {
                PcStatus::InvalidGraph
            }
            Error::Io(_) => PcStatus::Io,
            Error::TooLarge { .. } => PcStatus::TooLarge,
            _ => PcStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(PcStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            PcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            PcStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const PcGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn cover_ref<'a>(c: *const PcCover) -> Result<&'a Cover, Failure> {
    c.as_ref().map(|c| &c.0).ok_or_else(|| null("cover"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or may be null
/// when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut PcGraph,
) -> PcStatus {
    guard(|| {
        let flat = if edge_count == 0 {
            &[][..]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        put(out, PcGraph(Graph::from_edges(n, &pairs)?))
    })
}

/// Reads a graph file in the text format (`n m` header, one `u v` edge per line).
///
/// # Safety
/// `path` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_load(path: *const c_char, out: *mut *mut PcGraph) -> PcStatus {
    guard(|| {
        if path.is_null() {
            return Err(null("path"));
        }
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| Failure(PcStatus::InvalidArgument, "path is not UTF-8".into()))?;
        put(out, PcGraph(Graph::load(path)?))
    })
}

/// Generates the graph of planted instance `(k, n, d, i)` under `master_seed`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_generate(
    k: usize,
    n: usize,
    d: f64,
    i: u64,
    master_seed: u64,
    out: *mut *mut PcGraph,
) -> PcStatus {
    guard(|| put(out, PcGraph(generate(k, n, d, i, master_seed)?.graph)))
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from a `pc_graph_*` constructor and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_free(g: *mut PcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_vertex_count(g: *const PcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_edge_count(g: *const PcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Runs Approx1 or Approx2 (see `PC_ALGORITHM_*`) from the empty cover.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_solve(g: *const PcGraph, algorithm: u32, k: usize, out: *mut *mut PcCover) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let alg = match algorithm {
            PC_ALGORITHM_APPROX1 => Algorithm::Approx1,
            PC_ALGORITHM_APPROX2 => Algorithm::Approx2,
            other => return Err(Failure(PcStatus::InvalidArgument, format!("unknown algorithm {other}"))),
        };
        put(out, PcCover(solve(g, k, alg)?.cover))
    })
}

/// Computes an optimal cover exactly; graphs above `limit` vertices
/// (at most 24) are refused with `PC_STATUS_TOO_LARGE`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_exact(g: *const PcGraph, k: usize, limit: usize, out: *mut *mut PcCover) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        put(out, PcCover(exact_max_cover_with_limit(g, k, limit)?.1))
    })
}

/// Releases a cover. Null is ignored.
///
/// # Safety
/// `c` must come from `pc_solve` or `pc_exact` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pc_cover_free(c: *mut PcCover) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Total number of covered vertices, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live cover handle.
#[no_mangle]
pub unsafe extern "C" fn pc_cover_coverage(c: *const PcCover) -> usize {
    c.as_ref().map_or(0, |c| c.0.coverage())
}

/// Number of paths, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live cover handle.
#[no_mangle]
pub unsafe extern "C" fn pc_cover_path_count(c: *const PcCover) -> usize {
    c.as_ref().map_or(0, |c| c.0.len())
}

/// Order of path `index`, or 0 if the handle is null or the index is out of range.
///
/// # Safety
/// `c` must be null or a live cover handle.
#[no_mangle]
pub unsafe extern "C" fn pc_cover_path_len(c: *const PcCover, index: usize) -> usize {
    c.as_ref().and_then(|c| c.0.paths().get(index)).map_or(0, |p| p.order())
}

/// Copies the vertices of path `index` into `buf`, which holds `capacity` values.
///
/// # Safety
/// `c` must be a live cover handle; `buf` must have room for `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn pc_cover_path_copy(
    c: *const PcCover,
    index: usize,
    buf: *mut usize,
    capacity: usize,
) -> PcStatus {
    guard(|| {
        let c = cover_ref(c)?;
        let p = c.paths().get(index).ok_or_else(|| {
            Failure(PcStatus::InvalidArgument, format!("path index {index} out of range ({} paths)", c.len()))
        })?;
        if buf.is_null() {
            return Err(null("buffer"));
        }
        if capacity < p.order() {
            return Err(Failure(PcStatus::InvalidArgument, format!("buffer holds {capacity}, path has {}", p.order())));
        }
        ptr::copy_nonoverlapping(p.vertices().as_ptr(), buf, p.order());
        Ok(())
    })
}

/// Worst-case ratio bound of Approx1 for the given `k` (at least 4).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_theoretical_ratio(k: usize, out: *mut f64) -> PcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = theoretical_ratio(k)?;
        Ok(())
    })
}

/// Message of the last failed call on this thread, or null after a
/// successful call. Valid until the next `pc_*` call on the same thread.
#[no_mangle]
pub extern "C" fn pc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn pc_status_message(status: PcStatus) -> *const c_char {
    let s: &'static CStr = match status {
        PcStatus::Ok => c"ok",
        PcStatus::NullPointer => c"null pointer argument",
        PcStatus::InvalidArgument => c"invalid argument",
        PcStatus::InvalidGraph => c"invalid graph",
        PcStatus::Io => c"i/o error",
        PcStatus::TooLarge => c"graph too large",
        PcStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}
