//! Data-parallel sweep helpers with a sequential fallback.
//!
//! Every checker in the crate funnels its per-tuple work through these
//! functions, so a single [`Exec`] value decides whether a sweep runs on
//! rayon or on the current thread. Results are deterministic either way:
//! `find_first` semantics are used for counterexamples.

use crate::ctx::Exec;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(not(feature = "parallel"))]
fn effective(_exec: Exec) -> Exec {
    Exec::Sequential
}

#[cfg(feature = "parallel")]
fn effective(exec: Exec) -> Exec {
    exec
}

/// Map over indices `0..n`, collecting results in order.
pub fn map_indexed<U: Send>(exec: Exec, n: usize, f: impl Fn(usize) -> U + Send + Sync) -> Vec<U> {
    match effective(exec) {
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
        _ => (0..n).map(f).collect(),
    }
}

/// First index in `0..n` (in index order) where `f` returns `Some`, with the
/// payload.
pub fn find_first<U: Send>(
    exec: Exec,
    n: usize,
    f: impl Fn(usize) -> Option<U> + Send + Sync,
) -> Option<U> {
    match effective(exec) {
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..n).into_par_iter().find_map_first(f),
        _ => (0..n).find_map(f),
    }
}

/// Do all indices satisfy the predicate?
pub fn all(exec: Exec, n: usize, f: impl Fn(usize) -> bool + Send + Sync) -> bool {
    match effective(exec) {
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..n).into_par_iter().all(f),
        _ => (0..n).all(f),
    }
}

/// Flat-map over indices, preserving index order between chunks.
pub fn flat_map<U: Send>(
    exec: Exec,
    n: usize,
    f: impl Fn(usize) -> Vec<U> + Send + Sync,
) -> Vec<U> {
    match effective(exec) {
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..n).into_par_iter().flat_map_iter(f).collect(),
        _ => (0..n).flat_map(f).collect(),
    }
}
