//! C ABI for the gbei toolkit.
//!
//! Conventions:
//! - Every function returns a [`GbeiStatus`]; results travel through out
//!   pointers that are written only on `Ok`.
//! - Strings returned through out pointers are NUL terminated, UTF-8, and
//!   owned by the caller; release them with [`gbei_string_free`].
//! - Graphs are opaque handles created by [`gbei_graph_parse`] or
//!   [`gbei_graph_from_edges`] and released with [`gbei_graph_free`].
//! - On any non-`Ok` status, [`gbei_last_error`] returns a message that stays
//!   valid until the next call on the same thread.
//! - A `max_term_ops` argument of 0 selects the default work budget.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gbei_core::bei::{bounds_report, decompose_verify};
use gbei_core::certificates::{builtin, builtin_catalog, verify};
use gbei_core::graph::SimpleGraph;
use gbei_core::groebner::GbBudget;
use gbei_core::Error;

/// Result code shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GbeiStatus {
    /// The call succeeded and any out pointers were written.
    Ok = 0,
    /// A certificate was checked to completion and does not hold.
    VerifyFailed = 1,
    /// The graph is disconnected; the analysis requires connectivity.
    Disconnected = 2,
    /// Text input could not be parsed.
    ParseError = 3,
    /// The work budget ran out before an answer was reached.
    ResourceCap = 4,
    /// A required pointer argument was NULL.
    NullPointer = 5,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 6,
    /// Arguments were well formed but outside the supported range.
    InvalidInput = 7,
    /// An internal invariant failed; report this as a bug.
    Internal = 10,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let owned = CString::new(msg.replace('\0', "?")).expect("NULs stripped");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(owned));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(err: &Error) -> GbeiStatus {
    match err {
        Error::Disconnected => GbeiStatus::Disconnected,
        Error::Parse(_) => GbeiStatus::ParseError,
        Error::ResourceCap(_) => GbeiStatus::ResourceCap,
        Error::InvalidInput(_) | Error::UnitIdeal => GbeiStatus::InvalidInput,
        Error::Internal(_) => GbeiStatus::Internal,
    }
}

fn fail(err: Error) -> GbeiStatus {
    set_error(&err.to_string());
    status_of(&err)
}

/// Run a fallible body, translating panics into `Internal` instead of
/// unwinding across the ABI boundary.
fn guarded(body: impl FnOnce() -> GbeiStatus) -> GbeiStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            GbeiStatus::Internal
        }
    }
}

fn budget_from(max_term_ops: u64) -> GbBudget {
    let mut budget = GbBudget::default();
    if max_term_ops > 0 {
        budget.max_term_ops = Some(max_term_ops);
    }
    budget
}

/// Opaque connected-graph handle.
pub struct GbeiGraph {
    inner: SimpleGraph,
}

unsafe fn read_utf8<'a>(ptr: *const c_char) -> Result<&'a str, GbeiStatus> {
    if ptr.is_null() {
        set_error("NULL string argument");
        return Err(GbeiStatus::NullPointer);
    }
    match unsafe { CStr::from_ptr(ptr) }.to_str() {
        Ok(s) => Ok(s),
        Err(_) => {
            set_error("string argument is not valid UTF-8");
            Err(GbeiStatus::InvalidUtf8)
        }
    }
}

unsafe fn graph_ref<'a>(ptr: *const GbeiGraph) -> Result<&'a SimpleGraph, GbeiStatus> {
    if ptr.is_null() {
        set_error("NULL graph handle");
        return Err(GbeiStatus::NullPointer);
    }
    Ok(unsafe { &(*ptr).inner })
}

unsafe fn write_out<T>(ptr: *mut T, value: T) -> GbeiStatus {
    if ptr.is_null() {
        set_error("NULL out pointer");
        return GbeiStatus::NullPointer;
    }
    unsafe { ptr.write(value) };
    GbeiStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> GbeiStatus {
    let owned = match CString::new(s) {
        Ok(owned) => owned,
        Err(_) => {
            set_error("result contained an interior NUL");
            return GbeiStatus::Internal;
        }
    };
    unsafe { write_out(out, owned.into_raw()) }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn gbei_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent failure on this thread, or NULL if the last
/// call succeeded. The pointer stays valid until the next gbei call on the
/// same thread; do not free it.
#[no_mangle]
pub extern "C" fn gbei_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |msg| msg.as_ptr())
    })
}

/// Release a string returned through an out pointer.
///
/// # Safety
/// `s` must be a pointer previously returned by this library through a
/// `char **` out parameter, or NULL. Freeing anything else, or freeing the
/// same pointer twice, is undefined behavior.
#[no_mangle]
pub unsafe extern "C" fn gbei_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parse a graph from its text form: a vertex-count line followed by one
/// `u v` edge line per edge, 1-based.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gbei_graph_parse(
    text: *const c_char,
    out: *mut *mut GbeiGraph,
) -> GbeiStatus {
    guarded(|| {
        let text = match unsafe { read_utf8(text) } {
            Ok(text) => text,
            Err(status) => return status,
        };
        match SimpleGraph::parse(text) {
            Ok(inner) => unsafe { write_out(out, Box::into_raw(Box::new(GbeiGraph { inner }))) },
            Err(err) => fail(err),
        }
    })
}

/// Build a graph on vertices `1..=n` from `num_edges` pairs of endpoints
/// laid out flat as `u1, v1, u2, v2, ...`.
///
/// # Safety
/// `endpoints` must point to `2 * num_edges` readable `uint32_t` values
/// (it may be NULL only when `num_edges` is 0) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gbei_graph_from_edges(
    n: u32,
    endpoints: *const u32,
    num_edges: usize,
    out: *mut *mut GbeiGraph,
) -> GbeiStatus {
    guarded(|| {
        if endpoints.is_null() && num_edges > 0 {
            set_error("NULL endpoints with nonzero num_edges");
            return GbeiStatus::NullPointer;
        }
        let mut edges = Vec::with_capacity(num_edges);
        for i in 0..num_edges {
            let u = unsafe { endpoints.add(2 * i).read() };
            let v = unsafe { endpoints.add(2 * i + 1).read() };
            edges.push((u, v));
        }
        match SimpleGraph::new(n as usize, &edges) {
            Ok(inner) => unsafe { write_out(out, Box::into_raw(Box::new(GbeiGraph { inner }))) },
            Err(err) => fail(err),
        }
    })
}

/// Release a graph handle. NULL is ignored.
///
/// # Safety
/// `g` must have come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gbei_graph_free(g: *mut GbeiGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of vertices in the graph.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gbei_graph_vertex_count(
    g: *const GbeiGraph,
    out: *mut u32,
) -> GbeiStatus {
    guarded(|| {
        let graph = match unsafe { graph_ref(g) } {
            Ok(graph) => graph,
            Err(status) => return status,
        };
        unsafe { write_out(out, graph.n() as u32) }
    })
}

/// Canonical one-line form `n=.. E=..` of the graph.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer; free the
/// result with [`gbei_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gbei_graph_canonical(
    g: *const GbeiGraph,
    out: *mut *mut c_char,
) -> GbeiStatus {
    guarded(|| {
        let graph = match unsafe { graph_ref(g) } {
            Ok(graph) => graph,
            Err(status) => return status,
        };
        unsafe { write_string(out, graph.canonical_id()) }
    })
}

/// Full bounds-and-classification report as a JSON object; see the crate
/// documentation for the field layout.
///
/// # Safety
/// `g` must be a live graph handle and `out_json` a valid pointer; free the
/// result with [`gbei_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gbei_analyze_json(
    g: *const GbeiGraph,
    m: u32,
    characteristic: u64,
    out_json: *mut *mut c_char,
) -> GbeiStatus {
    guarded(|| {
        let graph = match unsafe { graph_ref(g) } {
            Ok(graph) => graph,
            Err(status) => return status,
        };
        match bounds_report(m, graph, characteristic) {
            Ok(report) => {
                let json = serde_json::to_string_pretty(&report).expect("report serializes");
                unsafe { write_string(out_json, json) }
            }
            Err(err) => fail(err),
        }
    })
}

/// Same report as [`gbei_analyze_json`], rendered as plain text.
///
/// # Safety
/// `g` must be a live graph handle and `out_text` a valid pointer; free the
/// result with [`gbei_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gbei_analyze_text(
    g: *const GbeiGraph,
    m: u32,
    characteristic: u64,
    out_text: *mut *mut c_char,
) -> GbeiStatus {
    guarded(|| {
        let graph = match unsafe { graph_ref(g) } {
            Ok(graph) => graph,
            Err(status) => return status,
        };
        match bounds_report(m, graph, characteristic) {
            Ok(report) => unsafe { write_string(out_text, report.to_text()) },
            Err(err) => fail(err),
        }
    })
}

/// Cut sets of the graph as a JSON array of vertex arrays, the empty set
/// first, then by size and lexicographic order.
///
/// # Safety
/// `g` must be a live graph handle and `out_json` a valid pointer; free the
/// result with [`gbei_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gbei_cutsets_json(
    g: *const GbeiGraph,
    out_json: *mut *mut c_char,
) -> GbeiStatus {
    guarded(|| {
        let graph = match unsafe { graph_ref(g) } {
            Ok(graph) => graph,
            Err(status) => return status,
        };
        match graph.cut_sets() {
            Ok(sets) => {
                let json = serde_json::to_string(&sets).expect("cut sets serialize");
                unsafe { write_string(out_json, json) }
            }
            Err(err) => fail(err),
        }
    })
}

/// Check that the edge-minor ideal equals the intersection of its cut-set
/// primes. Writes 1 to `out_holds` when the identity holds, 0 otherwise.
///
/// # Safety
/// `g` must be a live graph handle and `out_holds` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gbei_decompose(
    g: *const GbeiGraph,
    m: u32,
    characteristic: u64,
    max_term_ops: u64,
    out_holds: *mut i32,
) -> GbeiStatus {
    guarded(|| {
        let graph = match unsafe { graph_ref(g) } {
            Ok(graph) => graph,
            Err(status) => return status,
        };
        match decompose_verify(m, graph, characteristic, &budget_from(max_term_ops)) {
            Ok(outcome) => unsafe { write_out(out_holds, outcome.holds as i32) },
            Err(err) => fail(err),
        }
    })
}

/// Check one named builtin certificate. Writes 1 to `out_pass` when every
/// claim verifies, 0 otherwise; a completed failing check returns
/// `VerifyFailed` with `out_pass` still written.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out_pass` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gbei_verify_builtin(
    name: *const c_char,
    k_max: u32,
    max_term_ops: u64,
    out_pass: *mut i32,
) -> GbeiStatus {
    guarded(|| {
        let name = match unsafe { read_utf8(name) } {
            Ok(name) => name,
            Err(status) => return status,
        };
        let cert = match builtin(name) {
            Ok(cert) => cert,
            Err(err) => return fail(err),
        };
        match verify(&cert, k_max, &budget_from(max_term_ops)) {
            Ok(report) => {
                let status = unsafe { write_out(out_pass, report.pass as i32) };
                if status == GbeiStatus::Ok && !report.pass {
                    set_error("certificate check completed and failed");
                    return GbeiStatus::VerifyFailed;
                }
                status
            }
            Err(err) => fail(err),
        }
    })
}

/// Check one named builtin certificate and return the full report as JSON.
/// Distinguishes a completed failing check (`VerifyFailed`, JSON written)
/// from a check that could not finish (other statuses, JSON not written).
///
/// # Safety
/// `name` must be a NUL-terminated string and `out_json` a valid pointer;
/// free the result with [`gbei_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gbei_verify_builtin_json(
    name: *const c_char,
    k_max: u32,
    max_term_ops: u64,
    out_json: *mut *mut c_char,
) -> GbeiStatus {
    guarded(|| {
        let name = match unsafe { read_utf8(name) } {
            Ok(name) => name,
            Err(status) => return status,
        };
        let cert = match builtin(name) {
            Ok(cert) => cert,
            Err(err) => return fail(err),
        };
        match verify(&cert, k_max, &budget_from(max_term_ops)) {
            Ok(report) => {
                let json = serde_json::to_string_pretty(&report).expect("report serializes");
                let status = unsafe { write_string(out_json, json) };
                if status == GbeiStatus::Ok && !report.pass {
                    set_error("certificate check completed and failed");
                    return GbeiStatus::VerifyFailed;
                }
                status
            }
            Err(err) => fail(err),
        }
    })
}

/// Summary of the builtin certificate catalog as a JSON array of objects
/// with fields `name`, `m`, `n`, `char`, `witness`, `claims`, `source`.
///
/// # Safety
/// `out_json` must be a valid pointer; free the result with
/// [`gbei_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gbei_catalog_json(out_json: *mut *mut c_char) -> GbeiStatus {
    guarded(|| {
        let rows: Vec<serde_json::Value> = builtin_catalog()
            .iter()
            .map(|cert| {
                serde_json::json!({
                    "name": cert.name,
                    "m": cert.spec.m,
                    "n": cert.spec.n,
                    "char": cert.spec.characteristic,
                    "witness": cert.witness.len(),
                    "claims": cert.claims.len(),
                    "source": cert.source,
                })
            })
            .collect();
        let json = serde_json::to_string_pretty(&rows).expect("catalog serializes");
        unsafe { write_string(out_json, json) }
    })
}
