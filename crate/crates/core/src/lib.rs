//! Exact-arithmetic workbench for a rank-two shifted Yangian and the
//! surrounding invariant theory.
//!
//! * [`scalar`], [`ncpoly`], [`cpoly`] — arbitrary-precision rationals, the
//!   free associative algebra on the generator alphabet, and sparse
//!   commutative polynomials. No floating point anywhere.
//! * [`yangian`] — the shifted Yangian `Y_2` with shift `2n - 2`: rewrite
//!   rules to PBW normal form, the central series and its closed form,
//!   centrality and confluence suites, and the two truncated quotients.
//! * [`invariants`] — symmetric functions on a traceless alphabet, the
//!   diagram-folding degree combinatorics with a Molien-series oracle, and
//!   the deformation-universality classification table.
//! * [`kleinian`] — cyclic surface singularity rings `u v = w^m` with their
//!   graded Poisson brackets.
//! * [`exprio`] — the text grammar, parser, printer and JSON report schema.
//!
//! Batch work (term-wise reduction, randomized suites, group sums) runs on
//! rayon when the `parallel` feature is enabled (the default); results are
//! exact sums, hence identical either way.

pub mod cpoly;
pub mod exprio;
pub mod invariants;
pub mod kleinian;
pub mod ncpoly;
pub mod scalar;
pub mod yangian;

/// Execution strategy for data-parallel inner loops. `Parallel` falls back
/// to sequential execution when the `parallel` feature is disabled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

pub(crate) mod exec {
    use super::Parallelism;

    pub fn map<T, U, F>(items: Vec<T>, par: Parallelism, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if par == Parallelism::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        let _ = par;
        items.into_iter().map(f).collect()
    }
}
