//! Sparse commutative multivariate polynomials over exact rationals.
//!
//! A [`VarSet`] names the variables once; monomials are dense exponent
//! vectors over that set. All maps are sorted so iteration and printing are
//! deterministic.

use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CPolyError {
    #[error("polynomials belong to different variable sets")]
    VarSetMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("coordinate vector has length {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
}

/// An ordered set of variable names.
#[derive(Debug, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Arc<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = std::collections::BTreeSet::new();
        for n in &names {
            assert!(seen.insert(n.clone()), "duplicate variable name `{n}`");
        }
        Arc::new(VarSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exponent vector; the entry at position `i` is the exponent of variable `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponents(Vec<u32>);

impl Exponents {
    fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    fn mul(&self, other: &Exponents) -> Exponents {
        Exponents(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then lexicographic on the exponent vector.
impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A commutative polynomial with exact rational coefficients.
#[derive(Clone, Debug)]
pub struct CPoly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Exponents, Scalar>,
}

impl PartialEq for CPoly {
    fn eq(&self, other: &Self) -> bool {
        *self.vars == *other.vars && self.terms == other.terms
    }
}

impl Eq for CPoly {}

impl CPoly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        CPoly {
            vars: Arc::clone(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarSet>, c: Scalar) -> Self {
        let mut p = CPoly::zero(vars);
        p.add_term(Exponents(vec![0; vars.len()]), c);
        p
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        CPoly::constant(vars, Scalar::one())
    }

    pub fn variable(vars: &Arc<VarSet>, index: usize) -> Self {
        assert!(index < vars.len());
        let mut exps = vec![0; vars.len()];
        exps[index] = 1;
        let mut p = CPoly::zero(vars);
        p.add_term(Exponents(exps), Scalar::one());
        p
    }

    pub fn variable_named(vars: &Arc<VarSet>, name: &str) -> Result<Self, CPolyError> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| CPolyError::UnknownVariable(name.to_string()))?;
        Ok(CPoly::variable(vars, i))
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Exponents::total_degree).max()
    }

    /// Degree where variable `i` counts with weight `weights[i]`.
    pub fn weighted_degree(&self, weights: &[u64]) -> Option<u64> {
        self.terms
            .keys()
            .map(|e| {
                e.0.iter()
                    .zip(weights)
                    .map(|(&x, &w)| u64::from(x) * w)
                    .sum()
            })
            .max()
    }

    /// Coefficient of the constant term.
    pub fn constant_term(&self) -> Scalar {
        self.terms
            .get(&Exponents(vec![0; self.vars.len()]))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        assert_eq!(exps.len(), self.vars.len());
        self.terms
            .get(&Exponents(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: Scalar) {
        assert_eq!(exps.0.len(), self.vars.len());
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn monomial(vars: &Arc<VarSet>, exps: Vec<u32>, coeff: Scalar) -> Self {
        let mut p = CPoly::zero(vars);
        p.add_term(Exponents(exps), coeff);
        p
    }

    fn check_vars(&self, other: &CPoly) {
        assert!(
            *self.vars == *other.vars,
            "polynomials belong to different variable sets"
        );
    }

    pub fn add(&self, other: &CPoly) -> CPoly {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CPoly) -> CPoly {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> CPoly {
        CPoly {
            vars: Arc::clone(&self.vars),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> CPoly {
        if k.is_zero() {
            return CPoly::zero(&self.vars);
        }
        CPoly {
            vars: Arc::clone(&self.vars),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        self.check_vars(other);
        let mut out = CPoly::zero(&self.vars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> CPoly {
        let mut out = CPoly::one(&self.vars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> CPoly {
        assert!(i < self.vars.len());
        let mut out = CPoly::zero(&self.vars);
        for (e, c) in self.terms() {
            if e.0[i] == 0 {
                continue;
            }
            let mut exps = e.0.clone();
            let k = exps[i];
            exps[i] -= 1;
            out.add_term(Exponents(exps), c * &Scalar::from_int(i64::from(k)));
        }
        out
    }

    /// Simultaneous substitution: variable `i` is replaced by `images[i]`.
    /// The images live in a common target variable set.
    pub fn substitute_all(&self, images: &[CPoly]) -> Result<CPoly, CPolyError> {
        if images.len() != self.vars.len() {
            return Err(CPolyError::DimensionMismatch {
                got: images.len(),
                expected: self.vars.len(),
            });
        }
        let target = if let Some(first) = images.first() {
            for im in images {
                if *im.vars != *first.vars {
                    return Err(CPolyError::VarSetMismatch);
                }
            }
            Arc::clone(&first.vars)
        } else {
            Arc::clone(&self.vars)
        };
        let mut out = CPoly::zero(&target);
        for (e, c) in self.terms() {
            let mut term = CPoly::constant(&target, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&images[i].pow(k));
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Substitute a single variable, leaving the others alone.
    pub fn substitute(&self, index: usize, image: &CPoly) -> Result<CPoly, CPolyError> {
        if *image.vars != *self.vars {
            return Err(CPolyError::VarSetMismatch);
        }
        let images: Vec<CPoly> = (0..self.vars.len())
            .map(|i| {
                if i == index {
                    image.clone()
                } else {
                    CPoly::variable(&self.vars, i)
                }
            })
            .collect();
        self.substitute_all(&images)
    }
}

impl fmt::Display for CPoly {
    /// Leading (highest-degree) terms first; within a degree, lexicographic
    /// ascending. Matches the text grammar: `3/2 * x_1^2 * x_2 - x_3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = crate::exprio::print_cpoly(self);
        write!(f, "{rendered}")
    }
}
