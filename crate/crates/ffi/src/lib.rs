//! C ABI over the `sesquivalent` crate.
//!
//! Graphs are opaque [`SesqGraph`] handles created by `sesq_graph_*` and
//! released with [`sesq_graph_free`]. Every fallible call returns a
//! [`SesqStatus`]; on failure, [`sesq_last_error`] describes the error for
//! the calling thread. Strings returned by the library are freed with
//! [`sesq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_complex::Complex64;
use sesquivalent::exact::ExactEngine;
use sesquivalent::graph::parse_graph;
use sesquivalent::interpolator::{approximate_phi, ApproxConfig};
use sesquivalent::region::FailedCondition;
use sesquivalent::{Error, Graph, Point};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SesqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    OutsideRegion = 5,
    SizeLimit = 6,
    TruncationCap = 7,
    Internal = 8,
}

/// Which part of the region test failed.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SesqFailedCondition {
    None = 0,
    XCondition = 1,
    MainInequality = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SesqComplex {
    pub re: f64,
    pub im: f64,
}

impl From<SesqComplex> for Complex64 {
    fn from(c: SesqComplex) -> Complex64 {
        Complex64::new(c.re, c.im)
    }
}

impl From<Complex64> for SesqComplex {
    fn from(c: Complex64) -> SesqComplex {
        SesqComplex { re: c.re, im: c.im }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SesqRegionCertificate {
    pub inside: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub delta_slack: f64,
    pub a: f64,
    pub c: f64,
    pub alpha: f64,
    pub failed: SesqFailedCondition,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SesqApproximation {
    pub phi_hat: SesqComplex,
    pub a: f64,
    pub rho: f64,
    pub delta_slack: f64,
    pub m: usize,
    /// Certified bound on `|log Φ̂ - log Φ|`.
    pub tail_bound: f64,
}

/// Opaque graph handle.
pub struct SesqGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> SesqStatus {
    match err {
        Error::Parse { .. } | Error::Json(_) => SesqStatus::Parse,
        Error::OutsideRegion { .. } | Error::DivergentSeries { .. } => SesqStatus::OutsideRegion,
        Error::SizeLimit { .. } => SesqStatus::SizeLimit,
        Error::TruncationCap { .. } => SesqStatus::TruncationCap,
        Error::Input { source, .. } => status_of(source),
        Error::Io(_) | Error::NotNormalized(_) => SesqStatus::Internal,
        _ => SesqStatus::InvalidArgument,
    }
}

// Runs `f`, recording any error or panic for `sesq_last_error`.
fn guard<F: FnOnce() -> Result<(), (SesqStatus, String)>>(f: F) -> SesqStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SesqStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SesqStatus::Internal
        }
    }
}

fn lib<T>(r: sesquivalent::Result<T>) -> Result<T, (SesqStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (SesqStatus, String) {
    (SesqStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const SesqGraph) -> Result<&'a Graph, (SesqStatus, String)> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

fn point(x: SesqComplex, y: SesqComplex, z: SesqComplex) -> Point {
    Point::new(x.into(), y.into(), z.into())
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn sesq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an edge list (`u v` per line, optional `n N` header, `#`
/// comments) or a JSON document `{"n": N, "edges": [[u, v], ...]}`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sesq_graph_parse(text: *const c_char, out: *mut *mut SesqGraph) -> SesqStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (SesqStatus::InvalidUtf8, e.to_string()))?;
        let graph = lib(parse_graph(s))?;
        *out = Box::into_raw(Box::new(SesqGraph { graph }));
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` values (it may be null when
/// `edge_count` is 0) and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sesq_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut SesqGraph,
) -> SesqStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let graph = lib(Graph::from_edges(n, flat.chunks_exact(2).map(|p| (p[0], p[1]))))?;
        *out = Box::into_raw(Box::new(SesqGraph { graph }));
        Ok(())
    })
}

/// # Safety
/// `graph` must come from this library and not have been freed. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn sesq_graph_free(graph: *mut SesqGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn sesq_graph_vertex_count(graph: *const SesqGraph) -> usize {
    graph.as_ref().map_or(0, |h| h.graph.n())
}

/// # Safety
/// `graph` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn sesq_graph_edge_count(graph: *const SesqGraph) -> usize {
    graph.as_ref().map_or(0, |h| h.graph.edge_count())
}

/// # Safety
/// `graph` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn sesq_graph_max_degree(graph: *const SesqGraph) -> usize {
    graph.as_ref().map_or(0, |h| h.graph.max_degree())
}

/// Length of the shortest cycle, or 0 for a forest.
///
/// # Safety
/// `graph` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn sesq_graph_girth(graph: *const SesqGraph) -> usize {
    graph.as_ref().and_then(|h| h.graph.girth()).unwrap_or(0)
}

/// Exact `Φ_G(x, y, z)`. Graphs with more than `enum_limit` vertices are
/// rejected with `SESQ_STATUS_SIZE_LIMIT`.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sesq_phi_eval(
    graph: *const SesqGraph,
    x: SesqComplex,
    y: SesqComplex,
    z: SesqComplex,
    enum_limit: usize,
    out: *mut SesqComplex,
) -> SesqStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let value = lib(ExactEngine::new(enum_limit).phi_eval(g, x.into(), y.into(), z.into()))?;
        *out = value.into();
        Ok(())
    })
}

/// The full polynomial as JSON: `{"n": N, "terms": [{"v", "e", "c", "coef"}]}`
/// with decimal-string coefficients. Free the result with
/// [`sesq_string_free`].
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sesq_phi_polynomial_json(
    graph: *const SesqGraph,
    enum_limit: usize,
    out: *mut *mut c_char,
) -> SesqStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let poly = lib(ExactEngine::new(enum_limit).phi_polynomial(g))?;
        let text = CString::new(poly.to_json()).map_err(|e| (SesqStatus::Internal, e.to_string()))?;
        *out = text.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sesq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Zero-free region test for degree bound `delta` and auxiliary `a`. Pass
/// `girth = 0` for the unrefined test. A point outside the region is not an
/// error: `out->inside` is false and `out->failed` says why.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sesq_certify_region(
    delta: usize,
    a: f64,
    x: SesqComplex,
    y: SesqComplex,
    z: SesqComplex,
    girth: usize,
    out: *mut SesqRegionCertificate,
) -> SesqStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let girth = (girth > 0).then_some(girth);
        let cert = lib(sesquivalent::certify_region(delta, a, &point(x, y, z), girth))?;
        *out = SesqRegionCertificate {
            inside: cert.inside,
            lhs: cert.lhs,
            rhs: cert.rhs,
            delta_slack: cert.delta_slack,
            a: cert.a,
            c: cert.c,
            alpha: cert.alpha,
            failed: match cert.failed {
                None => SesqFailedCondition::None,
                Some(FailedCondition::XCondition) => SesqFailedCondition::XCondition,
                Some(FailedCondition::MainInequality) => SesqFailedCondition::MainInequality,
            },
        };
        Ok(())
    })
}

/// Deterministic approximation `Φ̂ = Φ e^η` with `|η| <= epsilon`.
///
/// `a` is the auxiliary parameter (NaN selects the optimum), `delta` the
/// analytic degree bound (0 selects the graph's maximum degree, at least 2)
/// and `m_cap` the largest truncation order allowed (0 selects the default).
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sesq_approximate(
    graph: *const SesqGraph,
    x: SesqComplex,
    y: SesqComplex,
    z: SesqComplex,
    a: f64,
    epsilon: f64,
    delta: usize,
    m_cap: usize,
    out: *mut SesqApproximation,
) -> SesqStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let mut config = ApproxConfig::default();
        if delta > 0 {
            config.delta = Some(delta);
        }
        if m_cap > 0 {
            config.m_cap = m_cap;
        }
        let a = (!a.is_nan()).then_some(a);
        let approx = lib(approximate_phi(g, &point(x, y, z), a, epsilon, &config))?;
        *out = SesqApproximation {
            phi_hat: approx.phi_hat.into(),
            a: approx.plan.a,
            rho: approx.plan.rho,
            delta_slack: approx.plan.delta_slack,
            m: approx.plan.m,
            tail_bound: approx.plan.tail_bound,
        };
        Ok(())
    })
}
