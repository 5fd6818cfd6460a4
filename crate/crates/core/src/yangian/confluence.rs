//! Randomized validation of the rewrite system: associativity of reduced
//! products and idempotence of the normal form. The PBW theorem makes the
//! correct rule table confluent, so any failure here is a table or engine
//! bug.

use super::{YangianAlgebra, YangianError};
use crate::exprio::print_ncpoly;
use crate::ncpoly::{Family, Generator, NcPoly, Word};
use crate::scalar::Scalar;
use crate::Parallelism;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug)]
pub struct ConfluenceOutcome {
    pub samples: u32,
    pub failures: u32,
    pub steps: u64,
    /// Printed `(input, discrepancy)` pairs for failing samples.
    pub witnesses: Vec<(String, String)>,
}

/// For `samples` seeded random triples `(p, q, r)` of degree at most
/// `degree_bound`, check `nf(nf(p q) r) = nf(p nf(q r))` and
/// `nf(nf(p)) = nf(p)`, exactly.
pub fn confluence_check(
    alg: &YangianAlgebra,
    degree_bound: u64,
    samples: u32,
    seed: u64,
    par: Parallelism,
) -> Result<ConfluenceOutcome, YangianError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[NcPoly; 3]> = (0..samples)
        .map(|_| {
            [
                random_poly(&mut rng, alg, degree_bound),
                random_poly(&mut rng, alg, degree_bound),
                random_poly(&mut rng, alg, degree_bound),
            ]
        })
        .collect();
    let results = crate::exec::map(triples, par, |[p, q, r]| -> Result<_, YangianError> {
        let mut steps = 0u64;
        let mut reduce = |x: &NcPoly| -> Result<NcPoly, YangianError> {
            let red = alg.reduce_with(x, Parallelism::Sequential)?;
            steps += red.steps;
            Ok(red.poly)
        };
        let left = {
            let pq = reduce(&p.mul(&q))?;
            reduce(&pq.mul(&r))?
        };
        let right = {
            let qr = reduce(&q.mul(&r))?;
            reduce(&p.mul(&qr))?
        };
        let nf_p = reduce(&p)?;
        let idem = reduce(&nf_p)?;
        let mut failure = None;
        if left != right {
            failure = Some((
                format!("({}) * ({}) * ({})", print_ncpoly(&p), print_ncpoly(&q), print_ncpoly(&r)),
                format!(
                    "association mismatch: {} vs {}",
                    print_ncpoly(&left),
                    print_ncpoly(&right)
                ),
            ));
        } else if idem != nf_p {
            failure = Some((
                print_ncpoly(&p),
                format!(
                    "not idempotent: {} vs {}",
                    print_ncpoly(&nf_p),
                    print_ncpoly(&idem)
                ),
            ));
        }
        Ok((steps, failure))
    });
    let mut outcome = ConfluenceOutcome {
        samples,
        failures: 0,
        steps: 0,
        witnesses: Vec::new(),
    };
    for r in results {
        let (steps, failure) = r?;
        outcome.steps += steps;
        if let Some(w) = failure {
            outcome.failures += 1;
            outcome.witnesses.push(w);
        }
    }
    Ok(outcome)
}

/// A random polynomial of canonical degree at most `degree_bound`: one to
/// three terms, words of up to two admissible letters with superscripts
/// capped at `e_min + 1`, small exact fractional coefficients. The size
/// caps keep triple products (degree up to three times the bound) within
/// the default step budget while still exercising every rule family.
pub fn random_poly(rng: &mut ChaCha8Rng, alg: &YangianAlgebra, degree_bound: u64) -> NcPoly {
    let bound = degree_bound.min(u64::from(u32::MAX)) as u32;
    let e_min = alg.shift() + 1;
    let cap = e_min + 1;
    let mut poly = NcPoly::zero();
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let target_len = rng.gen_range(0..=2usize);
        let mut remaining = bound;
        let mut letters = Vec::new();
        for _ in 0..target_len {
            if remaining == 0 {
                break;
            }
            let family = match rng.gen_range(0..4u8) {
                0 => Family::F,
                1 => Family::D1,
                2 => Family::D2,
                _ => Family::E,
            };
            let g = if family == Family::E {
                if remaining < e_min {
                    continue;
                }
                Generator::new(Family::E, rng.gen_range(e_min..=remaining.min(cap)))
            } else {
                Generator::new(family, rng.gen_range(1..=remaining.min(cap)))
            };
            remaining -= g.superscript;
            letters.push(g);
        }
        let numer = loop {
            let k = rng.gen_range(-6i64..=6);
            if k != 0 {
                break k;
            }
        };
        let denom = rng.gen_range(1i64..=4);
        poly.add_term(Word::new(letters), Scalar::fraction(numer, denom));
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yangian::Mode;

    #[test]
    fn trivial_samples_pass() {
        let alg = YangianAlgebra::new(2, Mode::Full).unwrap();
        let outcome = confluence_check(&alg, 4, 8, 7, Parallelism::Sequential).unwrap();
        assert_eq!(outcome.failures, 0);
        assert_eq!(outcome.samples, 8);
    }

    #[test]
    fn random_polys_respect_the_bound() {
        let alg = YangianAlgebra::new(2, Mode::Full).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let p = random_poly(&mut rng, &alg, 8);
            if let Some(d) = p.degree() {
                assert!(d <= 8);
            }
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let alg = YangianAlgebra::new(2, Mode::Full).unwrap();
        let a = random_poly(&mut ChaCha8Rng::seed_from_u64(42), &alg, 8);
        let b = random_poly(&mut ChaCha8Rng::seed_from_u64(42), &alg, 8);
        assert_eq!(a, b);
    }
}
