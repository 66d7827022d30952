//! Parallelism switch point.
//!
//! Every embarrassingly parallel loop in the crate (verifier trials, CLI row
//! evaluation, disorder ensembles) runs through [`map_indexed`], which uses
//! rayon when the `parallel` feature is enabled (the default) and falls back
//! to a plain loop otherwise. Results come back in index order either way, so
//! the two paths are bitwise identical. [`map_indexed_seq`] is always
//! sequential; the bench suite compares the two.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to `0..n`, collecting results in index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Applies `f` to `0..n`, collecting results in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Sequential reference implementation of [`map_indexed`].
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}
