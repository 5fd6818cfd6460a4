//! The free associative algebra on the Yangian generator alphabet.
//!
//! Words are sequences of [`Generator`] letters; polynomials are finite
//! linear combinations with [`Scalar`] coefficients stored in a sorted map so
//! that iteration, printing and hashing are reproducible.

use crate::scalar::Scalar;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Generator families in block order: a word is PBW-ordered when its letters
/// are sorted by family `F < D1 < D2 < E` and ascending superscript within a
/// family.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    F,
    D1,
    D2,
    E,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::F => "F",
            Family::D1 => "D1",
            Family::D2 => "D2",
            Family::E => "E",
        }
    }
}

/// A single generator letter, e.g. `D1^3` or `E^4`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator {
    pub family: Family,
    pub superscript: u32,
}

impl Generator {
    pub fn new(family: Family, superscript: u32) -> Self {
        assert!(superscript >= 1, "generator superscripts start at 1");
        Generator {
            family,
            superscript,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.family.label(), self.superscript)
    }
}

/// A word in the free monoid on generators. The canonical degree is the sum
/// of the superscripts and is cached alongside the word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    letters: Vec<Generator>,
    degree: u64,
}

impl Word {
    pub fn new(letters: Vec<Generator>) -> Self {
        let degree = letters.iter().map(|g| u64::from(g.superscript)).sum();
        Word { letters, degree }
    }

    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
            degree: 0,
        }
    }

    pub fn single(g: Generator) -> Self {
        Word {
            degree: u64::from(g.superscript),
            letters: vec![g],
        }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            degree: self.degree + other.degree,
        }
    }

    /// True when every adjacent pair respects the PBW block order.
    pub fn is_pbw_ordered(&self) -> bool {
        self.letters.windows(2).all(|w| !out_of_order(w[0], w[1]))
    }
}

/// An adjacent pair `a b` violates the PBW order when `a` belongs to a later
/// block than `b`, or to the same block with a larger superscript.
pub fn out_of_order(a: Generator, b: Generator) -> bool {
    match a.family.cmp(&b.family) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => a.superscript > b.superscript,
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total monomial order: canonical degree first, then the family sequence
/// position-wise, then the superscript sequence lexicographically. PBW words
/// are minimal among the words of their ideal class, and every rewrite step
/// strictly decreases this order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| {
                let fa = self.letters.iter().map(|g| g.family);
                let fb = other.letters.iter().map(|g| g.family);
                fa.cmp(fb)
            })
            .then_with(|| {
                let sa = self.letters.iter().map(|g| g.superscript);
                let sb = other.letters.iter().map(|g| g.superscript);
                sa.cmp(sb)
            })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// A noncommutative polynomial: a map from words to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        NcPoly::term(Word::empty(), Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        NcPoly::term(Word::empty(), c)
    }

    pub fn generator(g: Generator) -> Self {
        NcPoly::term(Word::single(g), Scalar::one())
    }

    pub fn term(word: Word, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NcPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Maximal term degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Word::degree).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Remove and return the largest term in the monomial order.
    pub fn pop_leading(&mut self) -> Option<(Word, Scalar)> {
        self.terms.pop_last()
    }

    pub fn add_term(&mut self, word: Word, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> NcPoly {
        if k.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Bilinear concatenation product in the free algebra.
    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (wa, ca) in self.terms() {
            for (wb, cb) in other.terms() {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    /// `self * other - other * self`, unreduced.
    pub fn commutator(&self, other: &NcPoly) -> NcPoly {
        self.mul(other).sub(&other.mul(self))
    }

    /// All words are PBW-ordered.
    pub fn is_pbw_ordered(&self) -> bool {
        self.terms.keys().all(Word::is_pbw_ordered)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d1(r: u32) -> Generator {
        Generator::new(Family::D1, r)
    }
    fn d2(r: u32) -> Generator {
        Generator::new(Family::D2, r)
    }
    fn e(r: u32) -> Generator {
        Generator::new(Family::E, r)
    }
    fn fgen(r: u32) -> Generator {
        Generator::new(Family::F, r)
    }

    #[test]
    fn concat_product() {
        let a = NcPoly::generator(d1(1));
        let b = NcPoly::generator(d2(1));
        let ab = a.mul(&b);
        assert_eq!(ab, NcPoly::term(Word::new(vec![d1(1), d2(1)]), Scalar::one()));
        assert_eq!(ab.degree(), Some(2));
    }

    #[test]
    fn identity_and_distributivity() {
        let p = NcPoly::generator(e(3)).add(&NcPoly::generator(fgen(1)));
        assert_eq!(NcPoly::one().mul(&p), p);
        let q = NcPoly::generator(fgen(1));
        let lhs = p.mul(&q);
        let mut rhs = NcPoly::zero();
        rhs.add_term(Word::new(vec![e(3), fgen(1)]), Scalar::one());
        rhs.add_term(Word::new(vec![fgen(1), fgen(1)]), Scalar::one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_basics() {
        let p = NcPoly::generator(e(3)).add(&NcPoly::generator(d1(2)));
        assert!(p.commutator(&p).is_zero());
        assert!(NcPoly::generator(d1(1)).commutator(&NcPoly::one()).is_zero());
        let c = NcPoly::generator(e(3)).commutator(&NcPoly::generator(fgen(1)));
        assert_eq!(c.coeff(&Word::new(vec![e(3), fgen(1)])), Scalar::one());
        assert_eq!(c.coeff(&Word::new(vec![fgen(1), e(3)])), -Scalar::one());
    }

    #[test]
    fn monomial_order_examples() {
        // degree dominates
        assert!(Word::new(vec![d1(1)]) < Word::new(vec![d1(2)]));
        // family position-wise at equal degree
        assert!(Word::new(vec![fgen(1), e(3)]) < Word::new(vec![d1(1), e(3)]));
        // superscript-lex at equal families: the swapped pair is smaller
        assert!(Word::new(vec![e(3), e(4)]) < Word::new(vec![e(4), e(3)]));
        assert!(out_of_order(e(4), e(3)));
        assert!(out_of_order(d2(1), d1(5)));
        assert!(!out_of_order(d1(5), d2(1)));
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec(
            (0u8..4, 1u32..5).prop_map(|(f, r)| {
                let family = match f {
                    0 => Family::F,
                    1 => Family::D1,
                    2 => Family::D2,
                    _ => Family::E,
                };
                Generator::new(family, r)
            }),
            0..4,
        )
        .prop_map(Word::new)
    }

    fn arb_poly() -> impl Strategy<Value = NcPoly> {
        proptest::collection::vec((arb_word(), -4i64..=4), 0..4).prop_map(|terms| {
            let mut p = NcPoly::zero();
            for (w, c) in terms {
                p.add_term(w, Scalar::from_int(c));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mul_is_associative(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        }

        #[test]
        fn degree_is_additive(p in arb_poly(), q in arb_poly()) {
            if let (Some(dp), Some(dq)) = (p.degree(), q.degree()) {
                prop_assert_eq!(p.mul(&q).degree(), Some(dp + dq));
            }
        }

        #[test]
        fn commutator_antisymmetry_and_jacobi(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(p.commutator(&q), q.commutator(&p).neg());
            let jacobi = p.commutator(&q.commutator(&r))
                .add(&q.commutator(&r.commutator(&p)))
                .add(&r.commutator(&p.commutator(&q)));
            prop_assert!(jacobi.is_zero());
        }
    }
}
