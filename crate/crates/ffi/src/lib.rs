//! C ABI over `cyclespec`.
//!
//! Graphs are opaque `CsGraph` handles created by the `cs_graph_*`
//! constructors and released with `cs_graph_free`. Every fallible call
//! returns a `CsStatus`; on failure `cs_last_error` describes the problem.
//! Strings returned through out-parameters are owned by the caller and
//! released with `cs_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cyclespec::generators::{kneser, mycielski, named};
use cyclespec::graph::{chromatic_number, io};
use cyclespec::independence::{alpha, iota};
use cyclespec::spectrum::{cycle_spectrum, l_and_l_odd};
use cyclespec::{Error, Graph};

/// Opaque graph handle.
pub struct CsGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Validation = 4,
    SizeLimit = 5,
    Domain = 6,
    Internal = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> CsStatus {
    match e {
        Error::Parse { .. } => CsStatus::Parse,
        Error::SizeLimit { .. } | Error::Budget { .. } => CsStatus::SizeLimit,
        Error::Domain(_) | Error::Precondition(_) | Error::HypothesisFailure(_) => CsStatus::Domain,
        Error::Validation(_) | Error::IndexOutOfRange { .. } => CsStatus::Validation,
        _ => CsStatus::Internal,
    }
}

/// Runs `f`, recording errors and panics for `cs_last_error`.
fn guard(f: impl FnOnce() -> Result<(), (CsStatus, String)>) -> CsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CsStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CsStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (CsStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (CsStatus, String) {
    (CsStatus::NullPointer, "null pointer argument".into())
}

unsafe fn graph_ref<'a>(g: *const CsGraph) -> Result<&'a Graph, (CsStatus, String)> {
    g.as_ref().map(|h| &h.inner).ok_or_else(null)
}

unsafe fn emit_graph(g: Graph, out: *mut *mut CsGraph) -> Result<(), (CsStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(CsGraph { inner: g }));
    Ok(())
}

unsafe fn emit_string(s: String, out: *mut *mut c_char) -> Result<(), (CsStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| (CsStatus::Internal, "string contains NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, (CsStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (CsStatus::InvalidArgument, "string is not UTF-8".to_string()))
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn cs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be NULL when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_new(n: usize, edges: *const usize, edge_count: usize, out: *mut *mut CsGraph) -> CsStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let g = Graph::from_edges(n, flat.chunks_exact(2).map(|p| (p[0], p[1]))).map_err(lib_err)?;
        emit_graph(g, out)
    })
}

/// Parses one graph6 record.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_from_graph6(text: *const c_char, out: *mut *mut CsGraph) -> CsStatus {
    guard(|| {
        let g = io::parse_graph6(read_str(text)?.as_bytes()).map_err(lib_err)?;
        emit_graph(g, out)
    })
}

/// Kneser graph `K_{n:r}`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_kneser(n: usize, r: usize, out: *mut *mut CsGraph) -> CsStatus {
    guard(|| emit_graph(kneser(n, r).map_err(lib_err)?, out))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_petersen(out: *mut *mut CsGraph) -> CsStatus {
    guard(|| emit_graph(named::petersen(), out))
}

/// Mycielskian of `g` as a new handle.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_mycielski(g: *const CsGraph, out: *mut *mut CsGraph) -> CsStatus {
    guard(|| emit_graph(mycielski(graph_ref(g)?), out))
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must come from a `cs_graph_*` constructor and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_free(g: *mut CsGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_vertex_count(g: *const CsGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.n())
}

/// Edge count, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_edge_count(g: *const CsGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.edge_count())
}

/// Graph6 encoding of `g`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_to_graph6(g: *const CsGraph, out: *mut *mut c_char) -> CsStatus {
    guard(|| emit_string(io::to_graph6(graph_ref(g)?), out))
}

/// Independence number.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_alpha(g: *const CsGraph, out: *mut usize) -> CsStatus {
    guard(|| {
        let value = alpha(graph_ref(g)?).value;
        *out.as_mut().ok_or_else(null)? = value;
        Ok(())
    })
}

/// Independence ratio as `numerator / denominator`; `exact` is set to 0
/// when only a lower bound was computed.
///
/// # Safety
/// `g` must be a live handle; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_iota(g: *const CsGraph, numerator: *mut i64, denominator: *mut i64, exact: *mut c_int) -> CsStatus {
    guard(|| {
        let r = iota(graph_ref(g)?).map_err(lib_err)?;
        let (num, den, ex) = (numerator.as_mut().ok_or_else(null)?, denominator.as_mut().ok_or_else(null)?, exact.as_mut().ok_or_else(null)?);
        *num = *r.value.numer();
        *den = *r.value.denom();
        *ex = r.is_exact() as c_int;
        Ok(())
    })
}

/// Exact chromatic number.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_chromatic_number(g: *const CsGraph, out: *mut usize) -> CsStatus {
    guard(|| {
        let chi = chromatic_number(graph_ref(g)?).map_err(lib_err)?.chromatic_number;
        *out.as_mut().ok_or_else(null)? = chi;
        Ok(())
    })
}

/// Cycle spectrum with `L` and `L∘` as a JSON object.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_cycle_spectrum_json(g: *const CsGraph, out: *mut *mut c_char) -> CsStatus {
    guard(|| {
        let spec = cycle_spectrum(graph_ref(g)?);
        let sums = l_and_l_odd(&spec);
        let doc = serde_json::json!({
            "lengths": spec.lengths,
            "exact": spec.is_exact(),
            "l": sums.l.to_string(),
            "l_odd": sums.l_odd.to_string(),
        });
        emit_string(doc.to_string(), out)
    })
}

/// Runs a command-line invocation given as a JSON array of arguments
/// (without the program name). The JSON payload goes to `out_json` and the
/// process-style exit code to `exit_code`; diagnostics are available from
/// `cs_last_error` when the exit code is non-zero.
///
/// # Safety
/// `args_json` must be a NUL-terminated string; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_run_json(args_json: *const c_char, out_json: *mut *mut c_char, exit_code: *mut c_int) -> CsStatus {
    let mut diagnostics = Vec::new();
    let status = guard(|| {
        let args: Vec<String> = serde_json::from_str(read_str(args_json)?)
            .map_err(|e| (CsStatus::Parse, format!("arguments must be a JSON array of strings: {e}")))?;
        let mut stdout = Vec::new();
        let code = cyclespec::cli::run(
            std::iter::once("cyclespec".to_string()).chain(args),
            &mut stdout,
            &mut diagnostics,
        );
        *exit_code.as_mut().ok_or_else(null)? = code;
        emit_string(String::from_utf8_lossy(&stdout).trim_end().to_string(), out_json)
    });
    if status == CsStatus::Ok && !diagnostics.is_empty() {
        set_error(String::from_utf8_lossy(&diagnostics).trim_end().to_string());
    }
    status
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
