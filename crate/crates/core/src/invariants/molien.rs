//! Exact Molien-series oracle for reflection-group invariant degrees.
//!
//! `(1/|W|) sum_w 1/det(1 - t w)` is computed as a truncated power series
//! over the rationals and matched against a product `prod_i 1/(1 - t^{d_i})`;
//! the recovered `d_i` independently confirm the shipped degree tables.

use super::dynkin::{DynkinError, DynkinType};
use crate::scalar::Scalar;
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MolienError {
    #[error("matrix dimensions disagree")]
    DimensionMismatch,
    #[error("closure exceeded the cap of {0} elements")]
    ClosureCap(usize),
    #[error("the given matrices are not closed under multiplication")]
    NotClosed,
    #[error("a generator is singular")]
    Singular,
    #[error("no product-form match up to the scanned degree bound: {0}")]
    NoProductForm(String),
}

/// A square matrix with exact rational entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(dim: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim);
            entries.extend(row.iter().map(|&k| Scalar::from_int(k)));
        }
        Matrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Scalar::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Scalar::one();
        }
        Matrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut entries = vec![Scalar::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        entries[i * d + j] += &(a * b);
                    }
                }
            }
        }
        Matrix { dim: d, entries }
    }

    fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..self.dim {
            acc += self.at(i, i);
        }
        acc
    }

    /// Coefficients `c_1..c_d` of the characteristic polynomial
    /// `x^d + c_1 x^{d-1} + ... + c_d`, by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> Vec<Scalar> {
        let d = self.dim;
        let mut coeffs = Vec::with_capacity(d);
        let mut m = Matrix::identity(d);
        for k in 1..=d {
            let ak = self.mul(&m);
            let ck = -(ak.trace() / Scalar::from_int(k as i64));
            m = ak;
            for i in 0..d {
                m.entries[i * d + i] += &ck;
            }
            coeffs.push(ck);
        }
        coeffs
    }

    /// `det(1 - t M)` as `[1, c_1, ..., c_d]`: the reversed characteristic
    /// polynomial.
    pub fn det_one_minus_t(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::one()];
        out.extend(self.char_poly());
        out
    }

    pub fn is_singular(&self) -> bool {
        // det M = (-1)^d c_d
        self.char_poly().last().map(Scalar::is_zero).unwrap_or(true)
    }
}

/// Multiplicative closure of the generators, breadth-first. The result is
/// closed by construction; errors out beyond `cap` elements.
pub fn group_closure(generators: &[Matrix], cap: usize) -> Result<Vec<Matrix>, MolienError> {
    let dim = generators
        .first()
        .map(Matrix::dim)
        .ok_or(MolienError::DimensionMismatch)?;
    if generators.iter().any(|g| g.dim() != dim) {
        return Err(MolienError::DimensionMismatch);
    }
    if generators.iter().any(Matrix::is_singular) {
        return Err(MolienError::Singular);
    }
    let mut seen: HashSet<Matrix> = HashSet::new();
    let mut order: Vec<Matrix> = Vec::new();
    let mut frontier = vec![Matrix::identity(dim)];
    seen.insert(frontier[0].clone());
    order.push(frontier[0].clone());
    while let Some(m) = frontier.pop() {
        for g in generators {
            let next = m.mul(g);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(MolienError::ClosureCap(cap));
                }
                order.push(next.clone());
                frontier.push(next);
            }
        }
    }
    Ok(order)
}

/// Closure check. Greedily pick elements of the set until their
/// multiplicative closure (which is closed by construction) reproduces the
/// whole set; if a product ever escapes the set, it is not closed. This
/// stays O(|S| * #generators) instead of O(|S|^2).
pub fn check_closure(matrices: &[Matrix]) -> Result<(), MolienError> {
    let dim = match matrices.first() {
        Some(m) => m.dim(),
        None => return Err(MolienError::DimensionMismatch),
    };
    let set: HashSet<&Matrix> = matrices.iter().collect();
    let identity = Matrix::identity(dim);
    if !set.contains(&identity) {
        return Err(MolienError::NotClosed);
    }
    let mut gens: Vec<Matrix> = Vec::new();
    let mut closure: HashSet<Matrix> = HashSet::new();
    closure.insert(identity);
    while closure.len() < set.len() {
        let next = matrices
            .iter()
            .find(|m| !closure.contains(*m))
            .expect("closure is a subset of the set")
            .clone();
        gens.push(next.clone());
        // expand the closure by the enlarged generating set
        let mut frontier: Vec<Matrix> = closure.iter().cloned().collect();
        while let Some(m) = frontier.pop() {
            for g in &gens {
                let prod = m.mul(g);
                if !set.contains(&prod) {
                    return Err(MolienError::NotClosed);
                }
                if closure.insert(prod.clone()) {
                    frontier.push(prod);
                }
            }
        }
    }
    Ok(())
}

/// Truncated coefficients of `(1/|G|) sum_g 1/det(1 - t g)`. Elements are
/// grouped by characteristic polynomial so each distinct factor is inverted
/// once.
pub fn molien_series(group: &[Matrix], bound: usize) -> Vec<Scalar> {
    let mut classes: HashMap<Vec<Scalar>, u64> = HashMap::new();
    for m in group {
        *classes.entry(m.det_one_minus_t()).or_insert(0) += 1;
    }
    let mut acc = vec![Scalar::zero(); bound + 1];
    for (poly, count) in classes {
        let inv = invert_series(&poly, bound);
        let weight = Scalar::from_int(count as i64);
        for (a, v) in acc.iter_mut().zip(&inv) {
            *a += &(v * &weight);
        }
    }
    let scale = Scalar::from_int(group.len() as i64).recip();
    for a in acc.iter_mut() {
        *a *= &scale;
    }
    acc
}

/// Inverse of a series with constant term 1, to the given bound.
fn invert_series(poly: &[Scalar], bound: usize) -> Vec<Scalar> {
    debug_assert!(poly[0].is_one());
    let mut inv = vec![Scalar::zero(); bound + 1];
    inv[0] = Scalar::one();
    for k in 1..=bound {
        let mut acc = Scalar::zero();
        for j in 1..=k.min(poly.len() - 1) {
            if !poly[j].is_zero() {
                acc += &(&poly[j] * &inv[k - j]);
            }
        }
        inv[k] = -acc;
    }
    inv
}

/// Match a series against `prod_i 1/(1 - t^{d_i})` with exactly `dim`
/// factors; returns the sorted degrees.
pub fn recover_degrees(series: &[Scalar], dim: usize) -> Result<Vec<u32>, MolienError> {
    let bound = series.len() - 1;
    let mut rem = series.to_vec();
    let mut degrees: Vec<u32> = Vec::new();
    for k in 1..=bound {
        if degrees.len() == dim {
            break;
        }
        let mult = rem[k].clone();
        if mult.is_zero() {
            continue;
        }
        let m: u64 = if mult.denom().eq(&num::BigInt::from(1)) {
            u64::try_from(mult.numer().clone()).map_err(|_| {
                MolienError::NoProductForm(format!(
                    "coefficient {mult} of t^{k} is not a non-negative integer"
                ))
            })?
        } else {
            return Err(MolienError::NoProductForm(format!(
                "coefficient {mult} of t^{k} is not a non-negative integer"
            )));
        };
        for _ in 0..m {
            if degrees.len() == dim {
                return Err(MolienError::NoProductForm(format!(
                    "more than {dim} degrees found"
                )));
            }
            degrees.push(k as u32);
            // rem *= (1 - t^k)
            for i in (k..=bound).rev() {
                let lower = rem[i - k].clone();
                rem[i] -= &lower;
            }
        }
    }
    if degrees.len() != dim {
        return Err(MolienError::NoProductForm(format!(
            "found {} of {dim} degrees within bound {bound}",
            degrees.len()
        )));
    }
    for (k, c) in rem.iter().enumerate() {
        let ok = if k == 0 { c.is_one() } else { c.is_zero() };
        if !ok {
            return Err(MolienError::NoProductForm(format!(
                "residual series has coefficient {c} at t^{k}"
            )));
        }
    }
    Ok(degrees)
}

/// The Molien oracle: verify the input is a group, compute its series, and
/// recover the invariant degrees.
pub fn molien_degrees(group: &[Matrix], bound: usize) -> Result<Vec<u32>, MolienError> {
    if group.is_empty() {
        return Err(MolienError::DimensionMismatch);
    }
    check_closure(group)?;
    let series = molien_series(group, bound);
    recover_degrees(&series, group[0].dim())
}

/// Simple reflections in the simple-root basis: `s_i` is the identity
/// except for row `i`, where `M[i][j] = delta_ij - <alpha_j, alpha_i^vee>`.
pub fn weyl_reflection_matrices(
    dtype: DynkinType,
    rank: u32,
) -> Result<Vec<Matrix>, DynkinError> {
    let a = cartan_matrix(dtype, rank)?;
    let r = rank as usize;
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        let mut rows: Vec<Vec<i64>> = (0..r)
            .map(|k| (0..r).map(|j| i64::from(k == j)).collect())
            .collect();
        for j in 0..r {
            rows[i][j] = i64::from(i == j) - a[j][i];
        }
        out.push(Matrix::from_rows(&rows));
    }
    Ok(out)
}

/// Cartan matrix `a[i][j] = <alpha_i, alpha_j^vee>`.
fn cartan_matrix(dtype: DynkinType, rank: u32) -> Result<Vec<Vec<i64>>, DynkinError> {
    let r = rank as usize;
    let invalid = DynkinError::InvalidRank { dtype, rank };
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let bond = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match (dtype, rank) {
        (DynkinType::A, r_) if r_ >= 1 => {
            for i in 0..r - 1 {
                bond(&mut a, i, i + 1);
            }
        }
        (DynkinType::B, r_) if r_ >= 2 => {
            for i in 0..r - 1 {
                bond(&mut a, i, i + 1);
            }
            // last root short: <alpha_{r-2}, alpha_{r-1}^vee> = -2
            a[r - 2][r - 1] = -2;
        }
        (DynkinType::C, r_) if r_ >= 2 => {
            for i in 0..r - 1 {
                bond(&mut a, i, i + 1);
            }
            a[r - 1][r - 2] = -2;
        }
        (DynkinType::D, r_) if r_ >= 3 => {
            for i in 0..r - 2 {
                bond(&mut a, i, i + 1);
            }
            bond(&mut a, r - 3, r - 1);
        }
        (DynkinType::E, 6 | 7 | 8) => {
            // chain 0-2-3-4-..., branch node 1 attached to 3
            bond(&mut a, 0, 2);
            for i in 2..r - 1 {
                bond(&mut a, i, i + 1);
            }
            bond(&mut a, 1, 3);
        }
        (DynkinType::F, 4) => {
            bond(&mut a, 0, 1);
            bond(&mut a, 1, 2);
            bond(&mut a, 2, 3);
            a[1][2] = -2;
        }
        (DynkinType::G, 2) => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
        _ => return Err(invalid),
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{fundamental_degrees, weyl_order};
    use num::bigint::BigInt;

    #[test]
    fn trivial_and_sign_groups() {
        let trivial = vec![Matrix::identity(1)];
        assert_eq!(molien_degrees(&trivial, 8).unwrap(), vec![1]);
        let sign = vec![Matrix::identity(1), Matrix::from_rows(&[vec![-1]])];
        assert_eq!(molien_degrees(&sign, 8).unwrap(), vec![2]);
    }

    #[test]
    fn signed_permutations_give_b2() {
        // W(B2) as the 8 signed 2x2 permutation matrices
        let mut group = Vec::new();
        for swap in [false, true] {
            for s1 in [1i64, -1] {
                for s2 in [1i64, -1] {
                    let rows = if swap {
                        vec![vec![0, s1], vec![s2, 0]]
                    } else {
                        vec![vec![s1, 0], vec![0, s2]]
                    };
                    group.push(Matrix::from_rows(&rows));
                }
            }
        }
        assert_eq!(molien_degrees(&group, 12).unwrap(), vec![2, 4]);
    }

    #[test]
    fn closure_check_rejects_non_groups() {
        let not_closed = vec![Matrix::identity(1), Matrix::from_rows(&[vec![2]])];
        assert_eq!(check_closure(&not_closed), Err(MolienError::NotClosed));
        assert!(molien_degrees(&not_closed, 6).is_err());
    }

    #[test]
    fn closure_sizes_match_weyl_orders() {
        for (t, r) in [
            (DynkinType::A, 2),
            (DynkinType::A, 3),
            (DynkinType::B, 2),
            (DynkinType::B, 3),
            (DynkinType::C, 3),
            (DynkinType::D, 4),
            (DynkinType::G, 2),
        ] {
            let gens = weyl_reflection_matrices(t, r).unwrap();
            let group = group_closure(&gens, 100_000).unwrap();
            assert_eq!(
                BigInt::from(group.len()),
                weyl_order(t, r).unwrap(),
                "{t}{r}"
            );
        }
    }

    #[test]
    fn molien_confirms_small_degree_tables() {
        for (t, r) in [(DynkinType::A, 2), (DynkinType::B, 2), (DynkinType::G, 2)] {
            let gens = weyl_reflection_matrices(t, r).unwrap();
            let group = group_closure(&gens, 100_000).unwrap();
            let degrees = molien_degrees(&group, 16).unwrap();
            assert_eq!(degrees, fundamental_degrees(t, r).unwrap().degrees, "{t}{r}");
        }
    }

    #[test]
    fn reflections_are_involutions() {
        for s in weyl_reflection_matrices(DynkinType::F, 4).unwrap() {
            assert_eq!(s.mul(&s), Matrix::identity(4));
        }
    }

    /// Rank 5-6 classical types and E6; slower, run with --ignored.
    #[test]
    #[ignore]
    fn molien_confirms_large_degree_tables() {
        for (t, r) in [
            (DynkinType::A, 5),
            (DynkinType::B, 5),
            (DynkinType::C, 5),
            (DynkinType::D, 6),
            (DynkinType::E, 6),
        ] {
            let gens = weyl_reflection_matrices(t, r).unwrap();
            let group = group_closure(&gens, 100_000).unwrap();
            let series = molien_series(&group, 16);
            let degrees = recover_degrees(&series, r as usize).unwrap();
            assert_eq!(degrees, fundamental_degrees(t, r).unwrap().degrees, "{t}{r}");
        }
    }
}
