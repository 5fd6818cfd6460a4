//! Symmetric functions on a traceless alphabet, diagram-folding degree
//! combinatorics, and the deformation-universality table.

mod dynkin;
mod molien;

pub use dynkin::{
    folding_degree_check, folding_pair, fundamental_degrees, lambda_partition, universality_row,
    universality_table, weyl_order, DynkinDatum, DynkinError, DynkinType, FoldingPair,
    FoldingReport, OrbitClass,
};
pub use molien::{
    group_closure, molien_degrees, molien_series, weyl_reflection_matrices, Matrix, MolienError,
};

use crate::cpoly::{CPoly, CPolyError, VarSet};
use crate::scalar::Scalar;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymmetricError {
    #[error("n must be at least 2, got {0}")]
    RankTooSmall(u32),
    #[error("elementary symmetric index {j} out of range 0..={max}")]
    IndexOutOfRange { j: u32, max: u32 },
    #[error(transparent)]
    Poly(#[from] CPolyError),
}

/// The polynomial ring on `x_1, ..., x_{2n}` modulo `x_1 + ... + x_{2n}`,
/// realized by eliminating `x_{2n}`.
pub struct SymmetricContext {
    n: u32,
    vars: Arc<VarSet>,
}

impl SymmetricContext {
    pub fn new(n: u32) -> Result<Self, SymmetricError> {
        if n < 2 {
            return Err(SymmetricError::RankTooSmall(n));
        }
        let names: Vec<String> = (1..2 * n).map(|i| format!("x_{i}")).collect();
        Ok(SymmetricContext {
            n,
            vars: VarSet::new(names),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn num_coords(&self) -> u32 {
        2 * self.n
    }

    /// The image of `x_i` in the quotient: the variable itself for
    /// `i < 2n`, and `-(x_1 + ... + x_{2n-1})` for the eliminated `x_{2n}`.
    pub fn coord(&self, i: u32) -> Result<CPoly, SymmetricError> {
        if i == 0 || i > 2 * self.n {
            return Err(SymmetricError::IndexOutOfRange {
                j: i,
                max: 2 * self.n,
            });
        }
        if i < 2 * self.n {
            Ok(CPoly::variable(&self.vars, (i - 1) as usize))
        } else {
            let mut sum = CPoly::zero(&self.vars);
            for k in 0..self.vars.len() {
                sum = sum.add(&CPoly::variable(&self.vars, k));
            }
            Ok(sum.neg())
        }
    }

    /// The `j`-th elementary symmetric polynomial of `x_1..x_{2n}` in the
    /// quotient; `e_0 = 1` and `e_1` reduces to zero.
    pub fn elementary_symmetric(&self, j: u32) -> Result<CPoly, SymmetricError> {
        let m = 2 * self.n;
        if j > m {
            return Err(SymmetricError::IndexOutOfRange { j, max: m });
        }
        // e_j over k variables by the one-variable-at-a-time recurrence
        let mut e: Vec<CPoly> = vec![CPoly::zero(&self.vars); (j + 1) as usize];
        e[0] = CPoly::one(&self.vars);
        for k in 1..=m {
            let xk = self.coord(k)?;
            for idx in (1..=j.min(k)).rev() {
                let lower = e[(idx - 1) as usize].clone();
                e[idx as usize] = e[idx as usize].add(&lower.mul(&xk));
            }
        }
        Ok(e[j as usize].clone())
    }

    /// The diagram involution `x_i -> -x_{2n+1-i}`, reduced in the quotient.
    pub fn gamma_action(&self, p: &CPoly) -> Result<CPoly, SymmetricError> {
        if **p.vars() != *self.vars {
            return Err(SymmetricError::Poly(CPolyError::VarSetMismatch));
        }
        let images: Vec<CPoly> = (1..2 * self.n)
            .map(|i| self.coord(2 * self.n + 1 - i).map(|q| q.neg()))
            .collect::<Result<_, _>>()?;
        Ok(p.substitute_all(&images)?)
    }

    /// Generators `e_3, e_5, ..., e_{2n-1}` of the coinvariant kernel; each
    /// is checked to equal `(e_j - e_j . gamma) / 2`.
    pub fn coinvariant_kernel(&self) -> Result<Vec<CPoly>, SymmetricError> {
        let mut out = Vec::new();
        for j in (3..2 * self.n).step_by(2) {
            let e = self.elementary_symmetric(j)?;
            let twisted = self.gamma_action(&e)?;
            let odd_part = e.sub(&twisted).scale(&Scalar::fraction(1, 2));
            debug_assert_eq!(odd_part, e);
            out.push(e);
        }
        Ok(out)
    }
}

/// Substitute `x_i -> x_i - rho_i` on any polynomial; `rho` must cover the
/// polynomial's variables.
pub fn rho_shift(p: &CPoly, rho: &[Scalar]) -> Result<CPoly, CPolyError> {
    let vars = p.vars();
    if rho.len() != vars.len() {
        return Err(CPolyError::DimensionMismatch {
            got: rho.len(),
            expected: vars.len(),
        });
    }
    let images: Vec<CPoly> = (0..vars.len())
        .map(|i| {
            CPoly::variable(vars, i).sub(&CPoly::constant(vars, rho[i].clone()))
        })
        .collect();
    p.substitute_all(&images)
}
