//! Cyclic (type A) surface singularity coordinate rings and their graded
//! Poisson brackets.
//!
//! For the order-`m` cyclic action `(x, y) -> (zeta x, zeta^{-1} y)` the
//! invariant ring is generated by `u = x^m`, `v = y^m`, `w = x y` subject to
//! `u v = w^m`. The bracket induced by `{x, y} = 1` is homogeneous of
//! degree -2 for `deg x = deg y = 1`. A monomial `x^a y^b` is invariant
//! exactly when `a = b (mod m)`, so invariance and re-expression through
//! `u, v, w` are integer-arithmetic checks.

use crate::cpoly::{CPoly, VarSet};
use crate::scalar::Scalar;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KleinianError {
    #[error("the cyclic order m must be at least 2, got {0}")]
    OrderTooSmall(u32),
    #[error("polynomial is not invariant: monomial x^{a} y^{b} with a != b (mod {m})")]
    NotInvariant { a: u32, b: u32, m: u32 },
    #[error("defining relation u v = w^m failed to verify")]
    RelationFailed,
    #[error("re-expression mismatch for bracket {{{0}}}")]
    ReexpressionMismatch(String),
}

pub struct KleinianRing {
    m: u32,
    /// the ambient plane coordinates
    xy: Arc<VarSet>,
    /// the singularity coordinates
    uvw: Arc<VarSet>,
    u: CPoly,
    v: CPoly,
    w: CPoly,
}

/// Pairwise brackets of the generators, written in `u, v, w`.
#[derive(Debug, Clone, PartialEq)]
pub struct PoissonBracketTable {
    /// `{w, u} = -m u`
    pub wu: CPoly,
    /// `{w, v} = m v`
    pub wv: CPoly,
    /// `{u, v} = m^2 w^{m-1}`
    pub uv: CPoly,
}

impl KleinianRing {
    /// Build the type `A_{m-1}` ring and verify `u v = w^m` identically.
    pub fn new(m: u32) -> Result<Self, KleinianError> {
        if m < 2 {
            return Err(KleinianError::OrderTooSmall(m));
        }
        let xy = VarSet::new(vec!["x", "y"]);
        let uvw = VarSet::new(vec!["u", "v", "w"]);
        let x = CPoly::variable(&xy, 0);
        let y = CPoly::variable(&xy, 1);
        let ring = KleinianRing {
            m,
            xy,
            uvw,
            u: x.pow(m),
            v: y.pow(m),
            w: x.mul(&y),
        };
        if ring.u.mul(&ring.v) != ring.w.pow(m) {
            return Err(KleinianError::RelationFailed);
        }
        Ok(ring)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn xy_vars(&self) -> &Arc<VarSet> {
        &self.xy
    }

    pub fn uvw_vars(&self) -> &Arc<VarSet> {
        &self.uvw
    }

    pub fn u(&self) -> &CPoly {
        &self.u
    }

    pub fn v(&self) -> &CPoly {
        &self.v
    }

    pub fn w(&self) -> &CPoly {
        &self.w
    }

    /// `{p, q} = dp/dx dq/dy - dp/dy dq/dx`, the bracket normalized by
    /// `{x, y} = 1`.
    pub fn bracket(&self, p: &CPoly, q: &CPoly) -> CPoly {
        let px = p.derivative(0);
        let py = p.derivative(1);
        let qx = q.derivative(0);
        let qy = q.derivative(1);
        px.mul(&qy).sub(&py.mul(&qx))
    }

    /// True when every monomial satisfies the invariance congruence.
    pub fn is_invariant(&self, p: &CPoly) -> bool {
        p.terms()
            .all(|(e, _)| e.exps()[0] % self.m == e.exps()[1] % self.m)
    }

    /// Rewrite an invariant polynomial through `u, v, w`: the monomial
    /// `x^a y^b` with `a - b = k m >= 0` is `u^k w^b`, and `v^k w^a` for
    /// the opposite sign.
    pub fn to_uvw(&self, p: &CPoly) -> Result<CPoly, KleinianError> {
        let mut out = CPoly::zero(&self.uvw);
        for (e, c) in p.terms() {
            let (a, b) = (e.exps()[0], e.exps()[1]);
            if a % self.m != b % self.m {
                return Err(KleinianError::NotInvariant { a, b, m: self.m });
            }
            let exps = if a >= b {
                vec![(a - b) / self.m, 0, b]
            } else {
                vec![0, (b - a) / self.m, a]
            };
            out = out.add(&CPoly::monomial(&self.uvw, exps, c.clone()));
        }
        Ok(out)
    }

    /// Expand a polynomial in `u, v, w` back into the plane coordinates.
    pub fn from_uvw(&self, p: &CPoly) -> CPoly {
        let mut out = CPoly::zero(&self.xy);
        for (e, c) in p.terms() {
            let term = self
                .u
                .pow(e.exps()[0])
                .mul(&self.v.pow(e.exps()[1]))
                .mul(&self.w.pow(e.exps()[2]));
            out = out.add(&term.scale(c));
        }
        out
    }

    /// The generator bracket table, each entry verified two ways: the plane
    /// bracket re-expressed through the invariants must match the closed
    /// form, and the closed form expanded back to the plane must match the
    /// plane bracket.
    pub fn bracket_table(&self) -> Result<PoissonBracketTable, KleinianError> {
        let m = i64::from(self.m);
        let u_var = CPoly::variable(&self.uvw, 0);
        let v_var = CPoly::variable(&self.uvw, 1);
        let w_var = CPoly::variable(&self.uvw, 2);
        let entries = [
            ("w, u", &self.w, &self.u, u_var.scale(&Scalar::from_int(-m))),
            ("w, v", &self.w, &self.v, v_var.scale(&Scalar::from_int(m))),
            (
                "u, v",
                &self.u,
                &self.v,
                w_var.pow(self.m - 1).scale(&Scalar::from_int(m * m)),
            ),
        ];
        let mut table = Vec::new();
        for (label, p, q, closed) in entries {
            let plane = self.bracket(p, q);
            let reexpressed = self.to_uvw(&plane)?;
            if reexpressed != closed || self.from_uvw(&closed) != plane {
                return Err(KleinianError::ReexpressionMismatch(label.to_string()));
            }
            table.push(closed);
        }
        let mut it = table.into_iter();
        Ok(PoissonBracketTable {
            wu: it.next().expect("three entries"),
            wv: it.next().expect("three entries"),
            uv: it.next().expect("three entries"),
        })
    }

    /// Bracket on the abstract presentation ring `C[u, v, w]`, extended from
    /// the generator table by the Leibniz rule.
    pub fn abstract_bracket(&self, f: &CPoly, g: &CPoly, table: &PoissonBracketTable) -> CPoly {
        let fu = f.derivative(0);
        let fv = f.derivative(1);
        let fw = f.derivative(2);
        let gu = g.derivative(0);
        let gv = g.derivative(1);
        let gw = g.derivative(2);
        // {f,g} = {u,v}(fu gv - fv gu) + {v,w}(fv gw - fw gv) + {w,u}(fw gu - fu gw)
        let vw = table.wv.neg();
        table
            .uv
            .mul(&fu.mul(&gv).sub(&fv.mul(&gu)))
            .add(&vw.mul(&fv.mul(&gw).sub(&fw.mul(&gv))))
            .add(&table.wu.mul(&fw.mul(&gu).sub(&fu.mul(&gw))))
    }

    /// All invariant monomials `x^a y^b` with `a + b <= degree_bound`.
    pub fn invariant_monomials(&self, degree_bound: u32) -> Vec<CPoly> {
        let mut out = Vec::new();
        for a in 0..=degree_bound {
            for b in 0..=(degree_bound - a) {
                if a % self.m == b % self.m {
                    out.push(CPoly::monomial(&self.xy, vec![a, b], Scalar::one()));
                }
            }
        }
        out
    }
}

#[derive(Debug)]
pub struct JacobiOutcome {
    pub triples: u64,
    pub failures: u64,
}

/// Verify the Jacobi identity exactly on all unordered triples of invariant
/// monomials up to the degree bound.
pub fn jacobi_check(ring: &KleinianRing, degree_bound: u32) -> JacobiOutcome {
    let monomials = ring.invariant_monomials(degree_bound);
    let n = monomials.len();
    let mut triples = 0;
    let mut failures = 0;
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let (p, q, r) = (&monomials[i], &monomials[j], &monomials[k]);
                let jac = ring
                    .bracket(p, &ring.bracket(q, r))
                    .add(&ring.bracket(q, &ring.bracket(r, p)))
                    .add(&ring.bracket(r, &ring.bracket(p, q)));
                triples += 1;
                if !jac.is_zero() {
                    failures += 1;
                }
            }
        }
    }
    JacobiOutcome { triples, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exprio::print_cpoly;

    #[test]
    fn construction_and_relation() {
        assert!(KleinianRing::new(1).is_err());
        for m in 2..=5 {
            let ring = KleinianRing::new(m).unwrap();
            assert_eq!(ring.u().mul(ring.v()), ring.w().pow(m));
            assert!(ring.is_invariant(ring.u()));
            assert!(ring.is_invariant(ring.v()));
            assert!(ring.is_invariant(ring.w()));
        }
        let ring = KleinianRing::new(2).unwrap();
        assert_eq!(print_cpoly(ring.u()), "x^2");
        assert_eq!(print_cpoly(ring.w()), "x * y");
    }

    #[test]
    fn bracket_normalization_and_table() {
        let ring = KleinianRing::new(3).unwrap();
        let x = CPoly::variable(ring.xy_vars(), 0);
        let y = CPoly::variable(ring.xy_vars(), 1);
        assert_eq!(ring.bracket(&x, &y), CPoly::one(ring.xy_vars()));
        // {w, u} = -m u by the Leibniz rule
        let wu = ring.bracket(ring.w(), ring.u());
        assert_eq!(wu, ring.u().scale(&Scalar::from_int(-3)));
        // {u, v} = m^2 w^{m-1}
        let uv = ring.bracket(ring.u(), ring.v());
        assert_eq!(uv, ring.w().pow(2).scale(&Scalar::from_int(9)));
        let table = ring.bracket_table().unwrap();
        assert_eq!(print_cpoly(&table.uv), "9 * w^2");
        assert_eq!(print_cpoly(&table.wu), "-3 * u");
        assert_eq!(print_cpoly(&table.wv), "3 * v");
    }

    #[test]
    fn m2_specialization() {
        let ring = KleinianRing::new(2).unwrap();
        let table = ring.bracket_table().unwrap();
        assert_eq!(print_cpoly(&table.uv), "4 * w");
    }

    #[test]
    fn bracket_degree_drop() {
        for m in 2..=6 {
            let ring = KleinianRing::new(m).unwrap();
            let pairs = [
                (ring.w(), ring.u()),
                (ring.w(), ring.v()),
                (ring.u(), ring.v()),
            ];
            for (p, q) in pairs {
                let b = ring.bracket(p, q);
                let expected = p.total_degree().unwrap() + q.total_degree().unwrap() - 2;
                assert_eq!(b.total_degree(), Some(expected), "m = {m}");
            }
        }
    }

    #[test]
    fn relation_ideal_is_stable() {
        // {g, uv - w^m} = 0 identically in the presentation ring
        for m in 2..=5 {
            let ring = KleinianRing::new(m).unwrap();
            let table = ring.bracket_table().unwrap();
            let uvw = ring.uvw_vars();
            let relation = CPoly::variable(uvw, 0)
                .mul(&CPoly::variable(uvw, 1))
                .sub(&CPoly::variable(uvw, 2).pow(m));
            for idx in 0..3 {
                let g = CPoly::variable(uvw, idx);
                let br = ring.abstract_bracket(&g, &relation, &table);
                assert!(br.is_zero(), "m = {m}, generator {idx}");
            }
        }
    }

    #[test]
    fn jacobi_small() {
        let ring = KleinianRing::new(2).unwrap();
        let outcome = jacobi_check(&ring, 5);
        assert!(outcome.triples > 0);
        assert_eq!(outcome.failures, 0);
    }

    #[test]
    fn reexpression_round_trip() {
        let ring = KleinianRing::new(4).unwrap();
        // x^5 y is invariant for m = 4: 5 - 1 = 4
        let p = CPoly::monomial(ring.xy_vars(), vec![5, 1], Scalar::fraction(2, 3));
        assert!(ring.is_invariant(&p));
        let q = ring.to_uvw(&p).unwrap();
        assert_eq!(print_cpoly(&q), "2/3 * u * w");
        assert_eq!(ring.from_uvw(&q), p);
        let bad = CPoly::monomial(ring.xy_vars(), vec![2, 1], Scalar::one());
        assert!(ring.to_uvw(&bad).is_err());
    }
}
