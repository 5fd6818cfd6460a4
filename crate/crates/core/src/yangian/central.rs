//! The central series `Z(u) = u (u-1)^{2n-1} D1(u) D2(u-1)` and its closed
//! form.
//!
//! Two independent routes compute the coefficients `Z^r`:
//!
//! * [`central_series_expand`] multiplies the polynomial `u (u-1)^{2n-1}`
//!   (built by repeated multiplication) with the truncated series
//!   `D1(u) D2(u-1)` (built from the geometric series for `1/(u-1)`), then
//!   reads off coefficients. No binomial identities are used; this is the
//!   oracle.
//! * [`central_element_closed_form`] evaluates a binomial formula. The
//!   `Corrected` flavor aligns the binomial index with the series expansion
//!   and agrees with the oracle for every `r`; the `Printed` flavor keeps an
//!   alternative indexing that is retained for comparison and provably
//!   disagrees at `n = 2, r = 1`.
//!
//! Everything here is commutative: the diagonal generators commute, so the
//! coefficients live in a polynomial ring with variables `D1^r`, `D2^r`.

use crate::cpoly::{CPoly, VarSet};
use crate::ncpoly::{Family, Generator, NcPoly, Word};
use crate::scalar::Scalar;
use std::sync::Arc;

/// The commutative variable set `D1^1..D1^R, D2^1..D2^R` together with the
/// conversion into PBW-sorted words.
pub struct DVars {
    vars: Arc<VarSet>,
    r_max: u32,
}

impl DVars {
    pub fn new(r_max: u32) -> Self {
        assert!(r_max >= 1);
        let mut names = Vec::with_capacity(2 * r_max as usize);
        for r in 1..=r_max {
            names.push(format!("D1^{r}"));
        }
        for r in 1..=r_max {
            names.push(format!("D2^{r}"));
        }
        DVars {
            vars: VarSet::new(names),
            r_max,
        }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn r_max(&self) -> u32 {
        self.r_max
    }

    pub(crate) fn index(&self, family: Family, r: u32) -> usize {
        assert!(r >= 1 && r <= self.r_max, "superscript {r} out of range");
        match family {
            Family::D1 => (r - 1) as usize,
            Family::D2 => (self.r_max + r - 1) as usize,
            _ => panic!("only diagonal families have commutative variables"),
        }
    }

    /// The variable `D_i^{(r)}`, with `r = 0` mapping to the constant 1.
    pub fn d(&self, family: Family, r: u32) -> CPoly {
        if r == 0 {
            CPoly::one(&self.vars)
        } else {
            CPoly::variable(&self.vars, self.index(family, r))
        }
    }

    /// Sorted-word image: `D1` letters ascending, then `D2` letters.
    pub fn to_ncpoly(&self, p: &CPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (exps, c) in p.terms() {
            let mut letters = Vec::new();
            for (i, &e) in exps.exps().iter().enumerate() {
                let (family, r) = if (i as u32) < self.r_max {
                    (Family::D1, i as u32 + 1)
                } else {
                    (Family::D2, i as u32 - self.r_max + 1)
                };
                for _ in 0..e {
                    letters.push(Generator::new(family, r));
                }
            }
            out.add_term(Word::new(letters), c.clone());
        }
        out
    }
}

/// Coefficients of the inverse series `D_i(u)^{-1}`, defined by the
/// convolution `sum_{s=0}^{t} D_i^{(s)} Dtilde_i^{(t-s)} = [t = 0]`.
pub fn d_inverse_coeff(dv: &DVars, family: Family, t: u32) -> CPoly {
    assert!(matches!(family, Family::D1 | Family::D2));
    if t == 0 {
        return CPoly::one(dv.vars());
    }
    let mut acc = CPoly::zero(dv.vars());
    for s in 1..=t {
        let lower = d_inverse_coeff(dv, family, t - s);
        acc = acc.sub(&dv.d(family, s).mul(&lower));
    }
    acc
}

/// The `u^{-r}` coefficient of `D2(u-1)`:
/// `sum_{s=0}^{r} C(r-1, r-s) D2^{(s)}`, with the `r = -1` coefficient
/// defined as 0.
pub fn shifted_d2_coeff(dv: &DVars, r: i64) -> CPoly {
    assert!(r >= -1);
    if r == -1 {
        return CPoly::zero(dv.vars());
    }
    let mut acc = CPoly::zero(dv.vars());
    for s in 0..=r {
        let coeff = Scalar::binomial(r - 1, r - s);
        if coeff.is_zero() {
            continue;
        }
        acc = acc.add(&dv.d(Family::D2, s as u32).scale(&coeff));
    }
    acc
}

/// `C^{(s)} = sum_{t=0}^{s} D1^{(t)} shifted_d2^{(s-t)}`.
fn c_coeff(dv: &DVars, s: u32) -> CPoly {
    let mut acc = CPoly::zero(dv.vars());
    for t in 0..=s {
        acc = acc.add(&dv.d(Family::D1, t).mul(&shifted_d2_coeff(dv, (s - t) as i64)));
    }
    acc
}

/// Series-multiplication oracle for `Z^{(0)} .. Z^{(r_max)}`.
pub fn central_series_expand(dv: &DVars, n: u32, r_max: u32) -> Vec<CPoly> {
    assert!(n >= 2);
    assert!(r_max <= dv.r_max());
    let deg = (2 * n) as usize;
    // u (u-1)^{2n-1} by repeated multiplication; index = power of u
    let mut upoly: Vec<Scalar> = vec![Scalar::zero(), Scalar::one()];
    for _ in 0..(2 * n - 1) {
        let mut next = vec![Scalar::zero(); upoly.len() + 1];
        for (i, c) in upoly.iter().enumerate() {
            next[i + 1] += c; // * u
            next[i] -= c; // * (-1)
        }
        upoly = next;
    }
    debug_assert_eq!(upoly.len(), deg + 1);

    let len = (r_max + 1) as usize;
    // 1/(u-1) = u^{-1} + u^{-2} + ... ; inv_pows[r][k] = [u^{-k}] (u-1)^{-r}
    let mut geom = vec![Scalar::zero(); len];
    for c in geom.iter_mut().skip(1) {
        *c = Scalar::one();
    }
    let mut inv_pows: Vec<Vec<Scalar>> = Vec::with_capacity(len);
    let mut unit = vec![Scalar::zero(); len];
    unit[0] = Scalar::one();
    inv_pows.push(unit);
    for r in 1..len {
        let prev = &inv_pows[r - 1];
        let mut next = vec![Scalar::zero(); len];
        for k in 0..len {
            for j in 0..=k {
                if !prev[j].is_zero() && !geom[k - j].is_zero() {
                    next[k] += &(&prev[j] * &geom[k - j]);
                }
            }
        }
        inv_pows.push(next);
    }

    // coefficients of D2(u-1), then of C(u) = D1(u) D2(u-1)
    let d2_shifted: Vec<CPoly> = (0..len)
        .map(|m| {
            let mut acc = CPoly::zero(dv.vars());
            for r in 0..=m {
                let weight = &inv_pows[r][m];
                if weight.is_zero() {
                    continue;
                }
                acc = acc.add(&dv.d(Family::D2, r as u32).scale(weight));
            }
            acc
        })
        .collect();
    let c_series: Vec<CPoly> = (0..len)
        .map(|m| {
            let mut acc = CPoly::zero(dv.vars());
            for a in 0..=m {
                acc = acc.add(&dv.d(Family::D1, a as u32).mul(&d2_shifted[m - a]));
            }
            acc
        })
        .collect();

    // [u^{2n-r}] of upoly * C(u)
    (0..len)
        .map(|r| {
            let mut acc = CPoly::zero(dv.vars());
            for s in 0..=r {
                let power = deg as i64 - r as i64 + s as i64;
                if !(0..=deg as i64).contains(&power) {
                    continue;
                }
                let f = &upoly[power as usize];
                if f.is_zero() {
                    continue;
                }
                acc = acc.add(&c_series[s].scale(f));
            }
            acc
        })
        .collect()
}

/// Indexing flavor for the closed-form coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CentralFormula {
    /// Binomial index aligned with the series expansion; agrees with the
    /// oracle for every `r`.
    Corrected,
    /// Alternative indexing retained for comparison; disagrees with the
    /// oracle at `n = 2, r = 1`.
    Printed,
}

fn parity_sign(k: i64) -> Scalar {
    if k.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// Closed-form `Z^{(r)}`.
///
/// Corrected: `sum_{s=0}^{r} C(2n-1, 2n-1-r+s) (-1)^{2n-r+s} C^{(s)}`.
/// Printed:   `sum_{s=0}^{r} C(2n-1, 2n-1-s)   (-1)^{2n-s}   C^{(s)}`.
pub fn central_element_closed_form(
    dv: &DVars,
    n: u32,
    r: u32,
    flavor: CentralFormula,
) -> CPoly {
    assert!(n >= 2);
    assert!(r <= dv.r_max());
    let m = 2 * n as i64 - 1;
    let mut acc = CPoly::zero(dv.vars());
    for s in 0..=r {
        let (k, sign_exp) = match flavor {
            CentralFormula::Corrected => {
                (m - r as i64 + s as i64, 2 * n as i64 - r as i64 + s as i64)
            }
            CentralFormula::Printed => (m - s as i64, 2 * n as i64 - s as i64),
        };
        let coeff = Scalar::binomial(m, k);
        if coeff.is_zero() {
            continue;
        }
        let signed = &coeff * &parity_sign(sign_exp);
        acc = acc.add(&c_coeff(dv, s).scale(&signed));
    }
    acc
}

/// A coefficient of the central series as a PBW-sorted noncommutative
/// polynomial on diagonal words (corrected closed form).
#[derive(Clone, Debug, PartialEq)]
pub struct CentralElement {
    pub r: u32,
    pub poly: NcPoly,
}

pub fn central_element(n: u32, r: u32) -> CentralElement {
    let dv = DVars::new(r.max(1));
    let c = central_element_closed_form(&dv, n, r, CentralFormula::Corrected);
    CentralElement {
        r,
        poly: dv.to_ncpoly(&c),
    }
}

/// Result of probing a central element against generators.
#[derive(Debug)]
pub struct CentralityOutcome {
    pub all_zero: bool,
    pub steps: u64,
    /// `(printed commutator, printed normal form, reduced to zero)`
    pub witnesses: Vec<(String, String, bool)>,
}

/// Reduce `[Z^r, g]` for each probe; success is every remainder exactly 0.
pub fn verify_centrality(
    alg: &super::YangianAlgebra,
    r: u32,
    probes: &[Generator],
) -> Result<CentralityOutcome, super::YangianError> {
    let z = central_element(alg.n(), r).poly;
    let mut outcome = CentralityOutcome {
        all_zero: true,
        steps: 0,
        witnesses: Vec::new(),
    };
    for g in probes {
        alg.check_admissible(*g)?;
        let comm = z.commutator(&NcPoly::generator(*g));
        let reduced = alg.reduce(&comm)?;
        let zero = reduced.poly.is_zero();
        outcome.all_zero &= zero;
        outcome.steps += reduced.steps;
        outcome.witnesses.push((
            format!("[Z^{r}, {g}]"),
            crate::exprio::print_ncpoly(&reduced.poly),
            zero,
        ));
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exprio::print_cpoly;

    #[test]
    fn inverse_series_first_coefficients() {
        let dv = DVars::new(3);
        assert_eq!(d_inverse_coeff(&dv, Family::D1, 0), CPoly::one(dv.vars()));
        assert_eq!(
            d_inverse_coeff(&dv, Family::D1, 1),
            dv.d(Family::D1, 1).neg()
        );
        // t = 2: D^1 D^1 - D^2, from multiplying out the inverse series
        let expected = dv
            .d(Family::D1, 1)
            .mul(&dv.d(Family::D1, 1))
            .sub(&dv.d(Family::D1, 2));
        assert_eq!(d_inverse_coeff(&dv, Family::D1, 2), expected);
        // convolution identity at t = 3
        let mut conv = CPoly::zero(dv.vars());
        for s in 0..=3u32 {
            conv = conv.add(&dv.d(Family::D2, s).mul(&d_inverse_coeff(&dv, Family::D2, 3 - s)));
        }
        assert!(conv.is_zero());
    }

    #[test]
    fn shifted_coefficients() {
        let dv = DVars::new(4);
        assert_eq!(shifted_d2_coeff(&dv, -1), CPoly::zero(dv.vars()));
        assert_eq!(shifted_d2_coeff(&dv, 0), CPoly::one(dv.vars()));
        assert_eq!(shifted_d2_coeff(&dv, 1), dv.d(Family::D2, 1));
        assert_eq!(
            shifted_d2_coeff(&dv, 2),
            dv.d(Family::D2, 1).add(&dv.d(Family::D2, 2))
        );
        // r = 3: D2^1 + 2 D2^2 + D2^3
        let expected = dv
            .d(Family::D2, 1)
            .add(&dv.d(Family::D2, 2).scale(&Scalar::from_int(2)))
            .add(&dv.d(Family::D2, 3));
        assert_eq!(shifted_d2_coeff(&dv, 3), expected);
    }

    #[test]
    fn series_oracle_low_coefficients() {
        let dv = DVars::new(2);
        let z = central_series_expand(&dv, 2, 2);
        assert_eq!(print_cpoly(&z[0]), "1");
        assert_eq!(print_cpoly(&z[1]), "D1^1 + D2^1 - 3");
        assert_eq!(
            print_cpoly(&z[2]),
            "D1^1 * D2^1 - 3 * D1^1 + D1^2 - 2 * D2^1 + D2^2 + 3"
        );
    }

    #[test]
    fn closed_form_matches_oracle_and_z0() {
        let dv = DVars::new(4);
        let oracle = central_series_expand(&dv, 2, 4);
        for r in 0..=4u32 {
            let closed = central_element_closed_form(&dv, 2, r, CentralFormula::Corrected);
            assert_eq!(closed, oracle[r as usize], "mismatch at r = {r}");
        }
        assert_eq!(
            print_cpoly(&central_element_closed_form(&dv, 2, 0, CentralFormula::Printed)),
            "1"
        );
    }

    #[test]
    fn printed_flavor_disagrees_at_r1() {
        let dv = DVars::new(1);
        let printed = central_element_closed_form(&dv, 2, 1, CentralFormula::Printed);
        // 1 - 3 C^{(1)} = 1 - 3 D1^1 - 3 D2^1: constant +1 instead of -3
        assert_eq!(print_cpoly(&printed), "-3 * D1^1 - 3 * D2^1 + 1");
        let oracle = central_series_expand(&dv, 2, 1);
        assert_ne!(printed, oracle[1]);
        assert_eq!(printed.constant_term(), Scalar::one());
        assert_eq!(oracle[1].constant_term(), Scalar::from_int(-3));
    }

    #[test]
    fn generic_rank_first_coefficient() {
        // any n: Z^1 = C^1 - (2n - 1) = D1^1 + D2^1 - (2n - 1)
        for n in 2..=5u32 {
            let dv = DVars::new(1);
            let z1 = central_element_closed_form(&dv, n, 1, CentralFormula::Corrected);
            let expected = dv
                .d(Family::D1, 1)
                .add(&dv.d(Family::D2, 1))
                .add(&CPoly::constant(
                    dv.vars(),
                    Scalar::from_int(-(2 * i64::from(n) - 1)),
                ));
            assert_eq!(z1, expected);
        }
    }

    #[test]
    fn central_element_words_are_sorted() {
        let z = central_element(2, 3);
        assert!(z.poly.is_pbw_ordered());
    }
}
