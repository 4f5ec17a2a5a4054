//! C ABI over the dual clique cover toolkit. Handles are opaque pointers
//! owned by the caller and released with the matching `_free` function; every
//! fallible call returns a [`DccStatus`] and leaves a message retrievable via
//! [`dcc_last_error_message`] on failure. Vertex ids at this boundary are
//! 0-based.

use std::cell::RefCell;
use std::ffi::CStr;
use std::path::PathBuf;

use libc::{c_char, size_t};

use dcc_core::cover::{validate_cover, CliqueCover, DccRepresentation};
use dcc_core::encoding::{encode_cover, EncodedCover};
use dcc_core::error::Error;
use dcc_core::graph::Graph;

pub struct DccGraph {
    inner: Graph,
}

pub struct DccCover {
    inner: CliqueCover,
}

pub struct DccRep {
    inner: DccRepresentation,
}

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DccStatus {
    Ok = 0,
    Io = 1,
    Format = 2,
    InvalidArgument = 3,
    Domain = 4,
    NullPointer = 5,
}

/// Cover construction algorithm selector.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DccConstructor {
    LovaszPeeling = 0,
    SuccinctPeeling = 1,
    GlobalAdmissibility = 2,
    LocalAdmissibility = 3,
    LocalPeeling = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(err: &Error) -> DccStatus {
    match err {
        Error::Io(_) => DccStatus::Io,
        Error::Parse { .. } | Error::BadContainer(_) | Error::Decode(_) => DccStatus::Format,
        Error::InvalidParam(_) => DccStatus::InvalidArgument,
        _ => DccStatus::Domain,
    }
}

fn fail(err: Error) -> DccStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

/// Copies the last error message (UTF-8, NUL-terminated, truncated to `cap`)
/// into `buf`. Returns the full message length in bytes, excluding the NUL.
///
/// # Safety
/// `buf` must point to at least `cap` writable bytes, or be null (in which
/// case only the length is returned).
#[no_mangle]
pub unsafe extern "C" fn dcc_last_error_message(buf: *mut c_char, cap: size_t) -> size_t {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        let bytes = msg.as_bytes();
        if !buf.is_null() && cap > 0 {
            let copy = bytes.len().min(cap - 1);
            std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, copy);
            *buf.add(copy) = 0;
        }
        bytes.len()
    })
}

unsafe fn path_from(ptr: *const c_char) -> Result<PathBuf, DccStatus> {
    if ptr.is_null() {
        set_error("null path");
        return Err(DccStatus::NullPointer);
    }
    match CStr::from_ptr(ptr).to_str() {
        Ok(s) => Ok(PathBuf::from(s)),
        Err(_) => {
            set_error("path is not valid UTF-8");
            Err(DccStatus::InvalidArgument)
        }
    }
}

macro_rules! out_ptr {
    ($ptr:expr) => {
        match unsafe { $ptr.as_mut() } {
            Some(slot) => slot,
            None => {
                set_error("null output pointer");
                return DccStatus::NullPointer;
            }
        }
    };
}

macro_rules! handle {
    ($ptr:expr) => {
        match unsafe { $ptr.as_ref() } {
            Some(h) => h,
            None => {
                set_error("null handle");
                return DccStatus::NullPointer;
            }
        }
    };
}

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

/// Loads a graph from the text format (`%` comments, `n m` header, 1-based
/// edge lines).
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_load(
    path: *const c_char,
    out: *mut *mut DccGraph,
) -> DccStatus {
    let slot = out_ptr!(out);
    let path = match path_from(path) {
        Ok(p) => p,
        Err(s) => return s,
    };
    match dcc_core::graph::load_graph_path(&path) {
        Ok(g) => {
            *slot = Box::into_raw(Box::new(DccGraph { inner: g }));
            DccStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// # Safety
/// `graph` must be a live handle; `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_save(graph: *const DccGraph, path: *const c_char) -> DccStatus {
    let g = handle!(graph);
    let path = match path_from(path) {
        Ok(p) => p,
        Err(s) => return s,
    };
    match dcc_core::graph::save_graph_path(&g.inner, &path) {
        Ok(()) => DccStatus::Ok,
        Err(e) => fail(e),
    }
}

/// Seeded Erdős–Rényi generator.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_gen_er(
    n: size_t,
    p: f64,
    seed: u64,
    out: *mut *mut DccGraph,
) -> DccStatus {
    let slot = out_ptr!(out);
    match dcc_core::generate::gen_er(n, p, seed) {
        Ok(g) => {
            *slot = Box::into_raw(Box::new(DccGraph { inner: g }));
            DccStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Two n-cliques joined by a perfect matching.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_gen_matched_cliques(
    n: size_t,
    out: *mut *mut DccGraph,
) -> DccStatus {
    let slot = out_ptr!(out);
    if n < 1 {
        set_error("n must be at least 1");
        return DccStatus::InvalidArgument;
    }
    *slot = Box::into_raw(Box::new(DccGraph {
        inner: dcc_core::generate::gen_matched_cliques(n),
    }));
    DccStatus::Ok
}

/// # Safety
/// `graph` must be a live handle (or null, which is a no-op).
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_free(graph: *mut DccGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_n(graph: *const DccGraph) -> size_t {
    graph.as_ref().map_or(0, |g| g.inner.n())
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_m(graph: *const DccGraph) -> size_t {
    graph.as_ref().map_or(0, |g| g.inner.m())
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_degeneracy(graph: *const DccGraph) -> u32 {
    graph
        .as_ref()
        .map_or(0, |g| dcc_core::degeneracy::degeneracy_ordering(&g.inner).degeneracy)
}

// ---------------------------------------------------------------------------
// Covers
// ---------------------------------------------------------------------------

/// Builds a clique cover of `graph` with the selected constructor, optionally
/// post-processed to be assignment-minimal.
///
/// # Safety
/// `graph` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dcc_cover_construct(
    graph: *const DccGraph,
    constructor: DccConstructor,
    assignment_minimal: bool,
    out: *mut *mut DccCover,
) -> DccStatus {
    let slot = out_ptr!(out);
    let g = handle!(graph);
    let dcc = match constructor {
        DccConstructor::LovaszPeeling => dcc_core::construct::lovasz_peeling(&g.inner),
        DccConstructor::SuccinctPeeling => dcc_core::construct::succinct_peeling(&g.inner),
        DccConstructor::GlobalAdmissibility => {
            dcc_core::construct::global_admissibility(&g.inner)
        }
        DccConstructor::LocalAdmissibility => dcc_core::construct::local_admissibility(&g.inner),
        DccConstructor::LocalPeeling => dcc_core::construct::local_peeling(&g.inner),
    };
    let cover = if assignment_minimal {
        match dcc_core::minimality::make_assignment_minimal(&g.inner, &dcc.cover) {
            Ok(c) => c,
            Err(e) => return fail(e),
        }
    } else {
        dcc.cover
    };
    *slot = Box::into_raw(Box::new(DccCover { inner: cover }));
    DccStatus::Ok
}

/// Loads a cover from either the text or the encoded format (detected by
/// magic bytes).
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dcc_cover_load(
    path: *const c_char,
    out: *mut *mut DccCover,
) -> DccStatus {
    let slot = out_ptr!(out);
    let path = match path_from(path) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let load = || -> Result<CliqueCover, Error> {
        let bytes = std::fs::read(&path)?;
        if bytes.starts_with(b"DCCE") {
            EncodedCover::read_from(bytes.as_slice())?.decode_cover()
        } else {
            dcc_core::cover::load_cover(bytes.as_slice())
        }
    };
    match load() {
        Ok(c) => {
            *slot = Box::into_raw(Box::new(DccCover { inner: c }));
            DccStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Writes the cover to `path`, in the binary varbyte format when `encoded` is
/// true and the text format otherwise.
///
/// # Safety
/// `cover` must be a live handle; `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn dcc_cover_save(
    cover: *const DccCover,
    path: *const c_char,
    encoded: bool,
) -> DccStatus {
    let c = handle!(cover);
    let path = match path_from(path) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let res = if encoded {
        encode_cover(&c.inner).write_to_path(&path)
    } else {
        dcc_core::cover::save_cover_path(&c.inner, &path)
    };
    match res {
        Ok(()) => DccStatus::Ok,
        Err(e) => fail(e),
    }
}

/// # Safety
/// `cover` must be a live handle (or null, which is a no-op).
#[no_mangle]
pub unsafe extern "C" fn dcc_cover_free(cover: *mut DccCover) {
    if !cover.is_null() {
        drop(Box::from_raw(cover));
    }
}

/// # Safety
/// `cover` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn dcc_cover_n(cover: *const DccCover) -> size_t {
    cover.as_ref().map_or(0, |c| c.inner.n())
}

/// # Safety
/// `cover` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn dcc_cover_num_cliques(cover: *const DccCover) -> size_t {
    cover.as_ref().map_or(0, |c| c.inner.num_cliques())
}

/// Total number of vertex-clique assignments.
///
/// # Safety
/// `cover` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn dcc_cover_size(cover: *const DccCover) -> size_t {
    cover.as_ref().map_or(0, |c| c.inner.size())
}

/// Checks that every clique induces a clique of `graph` and every edge is
/// covered; `Domain` with a witness message otherwise.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn dcc_cover_validate(
    graph: *const DccGraph,
    cover: *const DccCover,
) -> DccStatus {
    let g = handle!(graph);
    let c = handle!(cover);
    match validate_cover(&g.inner, &c.inner) {
        Ok(report) if report.is_valid() => DccStatus::Ok,
        Ok(report) => {
            set_error(report.summary());
            DccStatus::Domain
        }
        Err(e) => fail(e),
    }
}

/// `2m / size(C)`.
///
/// # Safety
/// Both handles and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn dcc_cover_compression_ratio(
    graph: *const DccGraph,
    cover: *const DccCover,
    out: *mut f64,
) -> DccStatus {
    let g = handle!(graph);
    let c = handle!(cover);
    let slot = out_ptr!(out);
    if c.inner.size() == 0 {
        set_error("cover has no assignments");
        return DccStatus::Domain;
    }
    *slot = 2.0 * g.inner.m() as f64 / c.inner.size() as f64;
    DccStatus::Ok
}

// ---------------------------------------------------------------------------
// DCC pair and algorithms
// ---------------------------------------------------------------------------

/// Pairs the cover with its incidence dual for query-side algorithms.
///
/// # Safety
/// `cover` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dcc_rep_build(
    cover: *const DccCover,
    out: *mut *mut DccRep,
) -> DccStatus {
    let slot = out_ptr!(out);
    let c = handle!(cover);
    *slot = Box::into_raw(Box::new(DccRep {
        inner: DccRepresentation::from_cover(c.inner.clone()),
    }));
    DccStatus::Ok
}

/// # Safety
/// `rep` must be a live handle (or null, which is a no-op).
#[no_mangle]
pub unsafe extern "C" fn dcc_rep_free(rep: *mut DccRep) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// `size(C) + size(L)`.
///
/// # Safety
/// `rep` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn dcc_rep_size(rep: *const DccRep) -> size_t {
    rep.as_ref().map_or(0, |r| r.inner.size())
}

/// Adjacency through label intersection; writes 1 or 0 into `out`.
///
/// # Safety
/// `rep` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dcc_rep_adjacent(
    rep: *const DccRep,
    u: u32,
    v: u32,
    out: *mut i32,
) -> DccStatus {
    let r = handle!(rep);
    let slot = out_ptr!(out);
    match dcc_core::cover::adjacency_query(&r.inner.dual, u, v) {
        Ok(b) => {
            *slot = b as i32;
            DccStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Breadth-first distances from `source` into `dist_out` (length `n`);
/// unreachable or uncovered vertices get `UINT32_MAX`.
///
/// # Safety
/// `rep` must be a live handle and `dist_out` must point to at least `cap`
/// writable `uint32_t`s with `cap >= n`.
#[no_mangle]
pub unsafe extern "C" fn dcc_rep_bfs(
    rep: *const DccRep,
    source: u32,
    dist_out: *mut u32,
    cap: size_t,
) -> DccStatus {
    let r = handle!(rep);
    if dist_out.is_null() {
        set_error("null output buffer");
        return DccStatus::NullPointer;
    }
    if cap < r.inner.n() {
        set_error(format!(
            "buffer holds {cap} entries, need {}",
            r.inner.n()
        ));
        return DccStatus::InvalidArgument;
    }
    match dcc_core::algo::bfs(&r.inner, source) {
        Ok(res) => {
            std::ptr::copy_nonoverlapping(res.dist.as_ptr(), dist_out, res.dist.len());
            DccStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Connected components from the cover alone. `labels_out` (length `n`)
/// receives the 0-based component label per vertex, or -1 for vertices
/// outside the cover universe; the component count goes to `count_out`.
///
/// # Safety
/// `cover` must be a live handle; `labels_out` must hold at least `cap >= n`
/// `int64_t`s; `count_out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn dcc_cover_components(
    cover: *const DccCover,
    labels_out: *mut i64,
    cap: size_t,
    count_out: *mut size_t,
) -> DccStatus {
    let c = handle!(cover);
    let count_slot = out_ptr!(count_out);
    if labels_out.is_null() {
        set_error("null output buffer");
        return DccStatus::NullPointer;
    }
    if cap < c.inner.n() {
        set_error(format!("buffer holds {cap} entries, need {}", c.inner.n()));
        return DccStatus::InvalidArgument;
    }
    let res = dcc_core::algo::connected_components(&c.inner);
    for (i, label) in res.label.iter().enumerate() {
        *labels_out.add(i) = label.map_or(-1, |l| l as i64);
    }
    *count_slot = res.count;
    DccStatus::Ok
}
