//! Data-parallel sweeps over corpora of functions and matrices.
//!
//! Single canonizations are microsecond work; the interesting workloads are
//! corpus-sized (thousands of random functions, dense evaluation grids).
//! With the default `parallel` feature these helpers fan out over rayon.
//! Building with `--no-default-features` swaps in sequential iteration with
//! identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::linfun::{CoefficientMatrix, GeneralLinearFunction};
use crate::quat::Quaternion;
use crate::svd::{minimal_decomposition, MinimalDecomposition};

/// Map `op` over a slice, in parallel when the `parallel` feature is on.
///
/// Output order always matches input order.
pub fn map<T, R, F>(items: &[T], op: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(op).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(op).collect()
    }
}

/// Coefficient matrix of every function in the corpus.
pub fn matrices(functions: &[GeneralLinearFunction]) -> Vec<CoefficientMatrix> {
    map(functions, |f| f.matrix())
}

/// Numeric rank of every function in the corpus.
pub fn ranks(functions: &[GeneralLinearFunction]) -> Vec<usize> {
    map(functions, |f| f.matrix().numeric_rank())
}

/// Minimal decomposition of every function in the corpus.
pub fn minimal_decompositions(functions: &[GeneralLinearFunction]) -> Vec<MinimalDecomposition> {
    map(functions, |f| minimal_decomposition(&f.matrix()))
}

/// One function evaluated across a grid of arguments.
pub fn evaluate_grid(f: &GeneralLinearFunction, args: &[Quaternion]) -> Vec<Quaternion> {
    map(args, |&q| f.evaluate(q))
}
