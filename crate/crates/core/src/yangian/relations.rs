//! The defining relations compiled into oriented rewrite rules.
//!
//! A rule is keyed by an adjacent generator pair that violates the PBW block
//! order; its replacement expands that two-letter word into the swapped word
//! plus the bracket terms, so repeated application sorts any word. Every
//! replacement word is strictly smaller in the monomial order than the
//! pattern, which makes rewriting terminate.
//!
//! The rule content ships as a human-readable data file (one rule per line,
//! `LHS -> term +/- term ...`). Rules loaded from a file take precedence;
//! pairs outside the file's superscript range are synthesized on demand from
//! the same relation families and memoized. Same-family E-E and F-F rules
//! are always generated through their contraction recursion, since a closed
//! listing would be infinite.

use crate::exprio;
use crate::ncpoly::{out_of_order, Family, Generator, NcPoly, Word};
use crate::scalar::Scalar;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::YangianError;

/// Rules for reordering out-of-order adjacent generator pairs.
pub struct RelationTable {
    explicit: HashMap<(Generator, Generator), Arc<NcPoly>>,
    memo: RwLock<HashMap<(Generator, Generator), Arc<NcPoly>>>,
    inverse_memo: RwLock<HashMap<u32, Arc<NcPoly>>>,
}

impl Default for RelationTable {
    fn default() -> Self {
        Self::new()
    }
}

fn gen(family: Family, r: u32) -> Generator {
    Generator::new(family, r)
}

fn word(letters: Vec<Generator>) -> Word {
    Word::new(letters)
}

impl RelationTable {
    pub fn new() -> Self {
        RelationTable {
            explicit: HashMap::new(),
            memo: RwLock::new(HashMap::new()),
            inverse_memo: RwLock::new(HashMap::new()),
        }
    }

    /// Number of explicitly loaded rules.
    pub fn loaded_rules(&self) -> usize {
        self.explicit.len()
    }

    /// The expansion of the two-letter word `a b`, which must be out of PBW
    /// order. Loaded rules win; everything else is synthesized and memoized.
    pub fn expansion(&self, a: Generator, b: Generator) -> Arc<NcPoly> {
        debug_assert!(out_of_order(a, b), "queried an in-order pair {a} {b}");
        if let Some(rule) = self.explicit.get(&(a, b)) {
            return Arc::clone(rule);
        }
        if let Some(rule) = self.memo.read().unwrap().get(&(a, b)) {
            return Arc::clone(rule);
        }
        let rule = Arc::new(self.builtin_expansion(a, b));
        self.memo
            .write()
            .unwrap()
            .entry((a, b))
            .or_insert_with(|| Arc::clone(&rule));
        rule
    }

    /// The bracket `[a, b] = a b - b a` as the table sees it.
    pub fn bracket(&self, a: Generator, b: Generator) -> NcPoly {
        self.expansion(a, b)
            .sub(&NcPoly::term(word(vec![b, a]), Scalar::one()))
    }

    fn builtin_expansion(&self, a: Generator, b: Generator) -> NcPoly {
        let swapped = NcPoly::term(word(vec![b, a]), Scalar::one());
        let r = a.superscript;
        let s = b.superscript;
        match (a.family, b.family) {
            // diagonal generators commute
            (Family::D1 | Family::D2, Family::D1 | Family::D2) => swapped,
            // [D1^r, F^s] = - sum_{t<r} F^{r+s-1-t} D1^t
            (Family::D1, Family::F) => {
                let mut out = swapped;
                for t in 0..r {
                    out.add_term(df_word(Family::D1, r + s - 1 - t, t), -Scalar::one());
                }
                out
            }
            // [D2^r, F^s] = + sum_{t<r} F^{r+s-1-t} D2^t
            (Family::D2, Family::F) => {
                let mut out = swapped;
                for t in 0..r {
                    out.add_term(df_word(Family::D2, r + s - 1 - t, t), Scalar::one());
                }
                out
            }
            // E^r D1^s = D1^s E^r - [D1^s, E^r], [D1^s, E^r] = + sum_{t<s} D1^t E^{s+r-1-t}
            (Family::E, Family::D1) => {
                let mut out = swapped;
                for t in 0..s {
                    out.add_term(de_word(Family::D1, t, s + r - 1 - t), -Scalar::one());
                }
                out
            }
            // [D2^s, E^r] = - sum_{t<s} D2^t E^{s+r-1-t}
            (Family::E, Family::D2) => {
                let mut out = swapped;
                for t in 0..s {
                    out.add_term(de_word(Family::D2, t, s + r - 1 - t), Scalar::one());
                }
                out
            }
            // [E^r, F^s] = - sum_{t=0}^{r+s-1} Dtilde1^t D2^{r+s-1-t}
            (Family::E, Family::F) => {
                let mut out = swapped;
                let m = r + s - 1;
                for t in 0..=m {
                    let dt = self.inverse_diag_word(t);
                    let tail = m - t;
                    for (w, c) in dt.terms() {
                        let mut letters = w.letters().to_vec();
                        if tail > 0 {
                            letters.push(gen(Family::D2, tail));
                        }
                        out.add_term(word(letters), -c);
                    }
                }
                out
            }
            // contraction recursion, staying within [s, r]
            (Family::E, Family::E) => swapped.add(&ee_bracket(r, s)),
            (Family::F, Family::F) => swapped.add(&ff_bracket(r, s)),
            _ => unreachable!("pair {a} {b} is never out of order"),
        }
    }

    /// Coefficients of the inverse series of `D1(u)`, written as sorted words
    /// in the commuting D1 letters: 1, -D1^1, D1^1 D1^1 - D1^2, ...
    fn inverse_diag_word(&self, t: u32) -> Arc<NcPoly> {
        if let Some(p) = self.inverse_memo.read().unwrap().get(&t) {
            return Arc::clone(p);
        }
        let result = if t == 0 {
            NcPoly::one()
        } else {
            let mut acc = NcPoly::zero();
            for s in 1..=t {
                let rest = self.inverse_diag_word(t - s);
                for (w, c) in rest.terms() {
                    let mut letters = w.letters().to_vec();
                    letters.push(gen(Family::D1, s));
                    letters.sort();
                    acc.add_term(word(letters), -c);
                }
            }
            acc
        };
        let result = Arc::new(result);
        self.inverse_memo
            .write()
            .unwrap()
            .entry(t)
            .or_insert_with(|| Arc::clone(&result));
        result
    }

    /// Parse a rule file and install its rules, overriding the built-in
    /// synthesis for the pairs it covers. `shift` gates E admissibility.
    pub fn load_rules(&mut self, text: &str, shift: u32) -> Result<usize, YangianError> {
        let mut count = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs_text, rhs_text) = line.split_once("->").ok_or_else(|| {
                YangianError::RuleFile {
                    line: line_no,
                    message: "missing `->`".into(),
                }
            })?;
            let lhs = parse_side(lhs_text, line_no)?;
            let rhs = parse_side(rhs_text, line_no)?;
            let pattern = rule_pattern(&lhs, line_no)?;
            check_admissible_poly(&lhs, shift, line_no)?;
            check_admissible_poly(&rhs, shift, line_no)?;
            let pattern_word = word(vec![pattern.0, pattern.1]);
            for (w, _) in rhs.terms() {
                if w.degree() > pattern_word.degree() || *w >= pattern_word {
                    return Err(YangianError::RuleFile {
                        line: line_no,
                        message: format!(
                            "replacement word `{w}` is not smaller than the pattern `{pattern_word}`"
                        ),
                    });
                }
            }
            if self.explicit.insert(pattern, Arc::new(rhs)).is_some() {
                return Err(YangianError::RuleFile {
                    line: line_no,
                    message: format!("duplicate rule for `{} {}`", pattern.0, pattern.1),
                });
            }
            count += 1;
        }
        Ok(count)
    }
}

fn parse_side(text: &str, line: usize) -> Result<NcPoly, YangianError> {
    let expr = exprio::parse(text).map_err(|e| YangianError::RuleFile {
        line,
        message: e.to_string(),
    })?;
    exprio::elaborate_free_nc(&expr).map_err(|e| YangianError::RuleFile {
        line,
        message: e.to_string(),
    })
}

fn rule_pattern(lhs: &NcPoly, line: usize) -> Result<(Generator, Generator), YangianError> {
    let bad = |message: String| YangianError::RuleFile { line, message };
    let mut terms = lhs.terms();
    let (w, c) = terms
        .next()
        .ok_or_else(|| bad("left-hand side is zero".into()))?;
    if terms.next().is_some() || !c.is_one() {
        return Err(bad(
            "left-hand side must be a single word with coefficient 1".into(),
        ));
    }
    let letters = w.letters();
    if letters.len() != 2 {
        return Err(bad("left-hand side must be a two-letter word".into()));
    }
    if !out_of_order(letters[0], letters[1]) {
        return Err(bad(format!(
            "`{} {}` is already in PBW order",
            letters[0], letters[1]
        )));
    }
    Ok((letters[0], letters[1]))
}

fn check_admissible_poly(p: &NcPoly, shift: u32, line: usize) -> Result<(), YangianError> {
    for (w, _) in p.terms() {
        for g in w.letters() {
            if g.family == Family::E && g.superscript <= shift {
                return Err(YangianError::RuleFile {
                    line,
                    message: format!("generator {g} is inadmissible: E superscripts must exceed {shift}"),
                });
            }
        }
    }
    Ok(())
}

/// `F^{r+s-1-t} D_i^{t}` with the `t = 0` factor suppressed.
fn df_word(diag: Family, f_super: u32, t: u32) -> Word {
    let mut letters = vec![gen(Family::F, f_super)];
    if t > 0 {
        letters.push(gen(diag, t));
    }
    word(letters)
}

/// `D_i^{t} E^{e_super}` with the `t = 0` factor suppressed.
fn de_word(diag: Family, t: u32, e_super: u32) -> Word {
    let mut letters = Vec::new();
    if t > 0 {
        letters.push(gen(diag, t));
    }
    letters.push(gen(Family::E, e_super));
    word(letters)
}

/// `[E^a, E^b]` for `a > b` via the contraction
/// `[E^a, E^b] = [E^{a-1}, E^{b+1}] - E^{a-1} E^b - E^b E^{a-1}`
/// with bases `[E^c, E^c] = 0` and `[E^{c+1}, E^c] = -E^c E^c`.
fn ee_bracket(a: u32, b: u32) -> NcPoly {
    let mut acc = NcPoly::zero();
    let (mut hi, mut lo) = (a, b);
    while hi > lo + 1 {
        acc.add_term(word(vec![gen(Family::E, hi - 1), gen(Family::E, lo)]), -Scalar::one());
        acc.add_term(word(vec![gen(Family::E, lo), gen(Family::E, hi - 1)]), -Scalar::one());
        hi -= 1;
        lo += 1;
    }
    if hi == lo + 1 {
        acc.add_term(word(vec![gen(Family::E, lo), gen(Family::E, lo)]), -Scalar::one());
    }
    acc
}

/// `[F^a, F^b]` for `a > b`; same contraction with the opposite sign,
/// base `[F^{c+1}, F^c] = F^c F^c`.
fn ff_bracket(a: u32, b: u32) -> NcPoly {
    let mut acc = NcPoly::zero();
    let (mut hi, mut lo) = (a, b);
    while hi > lo + 1 {
        acc.add_term(word(vec![gen(Family::F, hi - 1), gen(Family::F, lo)]), Scalar::one());
        acc.add_term(word(vec![gen(Family::F, lo), gen(Family::F, hi - 1)]), Scalar::one());
        hi -= 1;
        lo += 1;
    }
    if hi == lo + 1 {
        acc.add_term(word(vec![gen(Family::F, lo), gen(Family::F, lo)]), Scalar::one());
    }
    acc
}

/// Render the built-in rules for all pattern pairs with superscripts up to
/// `max_super` (E superscripts range over `shift+1 ..= shift+max_super`).
/// This is the generator for the shipped rule file; a test keeps the file
/// in sync.
pub fn dump_builtin_rules(shift: u32, max_super: u32) -> String {
    let table = RelationTable::new();
    let mut out = String::new();
    out.push_str("# Rewrite rules for the rank-two shifted Yangian, version 1.\n");
    out.push_str(&format!(
        "# Shift s_1,2 = {shift}: E superscripts start at {}.\n",
        shift + 1
    ));
    out.push_str("# One rule per line: out-of-order pair -> PBW-smaller expansion.\n");
    out.push_str("# Pairs beyond this superscript range, and all E-E / F-F pairs,\n");
    out.push_str("# are generated on demand from the same relation families.\n");
    let d_range = || 1..=max_super;
    let e_range = || (shift + 1)..=(shift + max_super);
    let mut emit = |a: Generator, b: Generator| {
        if !out_of_order(a, b) {
            return;
        }
        let rhs = table.expansion(a, b);
        out.push_str(&format!(
            "{} * {} -> {}\n",
            a,
            b,
            exprio::print_ncpoly(&rhs)
        ));
    };
    for r in d_range() {
        for s in d_range() {
            emit(gen(Family::D1, r), gen(Family::D1, s));
        }
    }
    for r in d_range() {
        for s in d_range() {
            emit(gen(Family::D2, r), gen(Family::D2, s));
        }
    }
    for r in d_range() {
        for s in d_range() {
            emit(gen(Family::D2, r), gen(Family::D1, s));
        }
    }
    for r in d_range() {
        for s in d_range() {
            emit(gen(Family::D1, r), gen(Family::F, s));
        }
    }
    for r in d_range() {
        for s in d_range() {
            emit(gen(Family::D2, r), gen(Family::F, s));
        }
    }
    for r in e_range() {
        for s in d_range() {
            emit(gen(Family::E, r), gen(Family::D1, s));
        }
    }
    for r in e_range() {
        for s in d_range() {
            emit(gen(Family::E, r), gen(Family::D2, s));
        }
    }
    for r in e_range() {
        for s in d_range() {
            emit(gen(Family::E, r), gen(Family::F, s));
        }
    }
    out
}
