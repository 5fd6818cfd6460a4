//! The rank-two shifted Yangian with shift `s_{1,2} = 2n - 2`, its PBW
//! rewriting engine, central elements, and the truncated quotients.
//!
//! Generators: `D1^r`, `D2^r`, `F^r` for `r >= 1` and `E^r` for
//! `r > 2n - 2`. Two truncations are supported on top of the full algebra:
//!
//! * `TruncatedGl` kills `D1^r` for `r > 1`; the higher `E`, `F` and `D2`
//!   letters then collapse onto the finitely many surviving generators.
//! * `TruncatedSo` additionally imposes `Z^1 = Z^3 = ... = Z^{2n-1} = 0`,
//!   compiled into substitutions for the odd `D2` letters.

pub mod central;
pub mod confluence;
pub mod dims;
pub mod relations;

pub use central::{
    central_element, central_element_closed_form, central_series_expand, d_inverse_coeff,
    shifted_d2_coeff, verify_centrality, CentralElement, CentralFormula, CentralityOutcome, DVars,
};
pub use confluence::{confluence_check, ConfluenceOutcome};
pub use dims::{generator_degrees, graded_dimension};
pub use relations::{dump_builtin_rules, RelationTable};

use crate::exprio::{self, ElabError, Expr, ParseError, RingOps};
use crate::ncpoly::{out_of_order, Family, Generator, NcPoly, Word};
use crate::scalar::Scalar;
use crate::Parallelism;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};
use thiserror::Error;

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// Rule file shipped with the crate, covering the `n = 2` alphabet up to
/// superscript 6. `build_algebra` loads it automatically for `n = 2` unless
/// a custom rule text is supplied.
pub const DEFAULT_RULES_N2: &str = include_str!("../../data/yangian_rules_n2.txt");

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Full,
    TruncatedGl,
    TruncatedSo,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Full => "full",
            Mode::TruncatedGl => "gl",
            Mode::TruncatedSo => "so",
        })
    }
}

#[derive(Debug, Error)]
pub enum YangianError {
    #[error("n must be at least 2, got {0}")]
    RankTooSmall(u32),
    #[error("rewrite budget of {budget} steps exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("rule file line {line}: {message}")]
    RuleFile { line: usize, message: String },
    #[error("rule synthesis failed: {0}")]
    RuleSynthesis(String),
    #[error("generator {generator} is inadmissible: {message}")]
    Inadmissible { generator: String, message: String },
}

/// Errors from turning text into an algebra element.
#[derive(Debug, Error)]
pub enum ElementError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Elab(#[from] ElabError),
}

pub struct BuildOptions {
    pub step_budget: u64,
    /// Contents of a rule file overriding the built-in relation synthesis
    /// for the pairs it covers.
    pub rules: Option<String>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            step_budget: DEFAULT_STEP_BUDGET,
            rules: None,
        }
    }
}

pub struct YangianAlgebra {
    n: u32,
    shift: u32,
    mode: Mode,
    step_budget: u64,
    table: RelationTable,
    /// TruncatedSo: substitutions for the odd `D2^{2r-1}`, `r = 1..=n`.
    so_subs: BTreeMap<u32, Arc<NcPoly>>,
    /// Truncated modes: memoized eliminations of `D2^m` for `m > 2n - 1`.
    elim_cache: RwLock<HashMap<u32, Arc<NcPoly>>>,
}

/// A reduction result with its rewrite-step count.
#[derive(Debug)]
pub struct Reduced {
    pub poly: NcPoly,
    pub steps: u64,
}

pub fn build_algebra(n: u32, mode: Mode, opts: BuildOptions) -> Result<YangianAlgebra, YangianError> {
    if n < 2 {
        return Err(YangianError::RankTooSmall(n));
    }
    let shift = 2 * n - 2;
    let mut table = RelationTable::new();
    match &opts.rules {
        Some(text) => {
            table.load_rules(text, shift)?;
        }
        None if n == 2 => {
            table.load_rules(DEFAULT_RULES_N2, shift)?;
        }
        None => {}
    }
    let mut alg = YangianAlgebra {
        n,
        shift,
        mode,
        step_budget: opts.step_budget,
        table,
        so_subs: BTreeMap::new(),
        elim_cache: RwLock::new(HashMap::new()),
    };
    if mode == Mode::TruncatedSo {
        alg.so_subs = compute_so_substitutions(n)?;
    }
    Ok(alg)
}

impl YangianAlgebra {
    /// Full algebra with default options, loading the shipped rule file for
    /// `n = 2`.
    pub fn new(n: u32, mode: Mode) -> Result<Self, YangianError> {
        build_algebra(n, mode, BuildOptions::default())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn step_budget(&self) -> u64 {
        self.step_budget
    }

    pub fn table(&self) -> &RelationTable {
        &self.table
    }

    pub fn check_admissible(&self, g: Generator) -> Result<(), YangianError> {
        if g.family == Family::E && g.superscript <= self.shift {
            return Err(YangianError::Inadmissible {
                generator: g.to_string(),
                message: format!("E superscript must exceed 2n-2 = {}", self.shift),
            });
        }
        Ok(())
    }

    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly, YangianError> {
        Ok(self.reduce(p)?.poly)
    }

    pub fn reduce(&self, p: &NcPoly) -> Result<Reduced, YangianError> {
        self.reduce_with(p, Parallelism::default())
    }

    /// Reduce to the PBW normal form. Terms reduce independently (in
    /// parallel when requested) and the exact sums make the result
    /// deterministic either way.
    pub fn reduce_with(&self, p: &NcPoly, par: Parallelism) -> Result<Reduced, YangianError> {
        for (w, _) in p.terms() {
            for g in w.letters() {
                self.check_admissible(*g)?;
            }
        }
        let items: Vec<(Word, Scalar)> =
            p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let results = crate::exec::map(items, par, |(w, c)| {
            self.reduce_word(w.letters()).map(|(q, steps)| (q.scale(&c), steps))
        });
        let mut poly = NcPoly::zero();
        let mut steps: u64 = 0;
        for r in results {
            let (q, s) = r?;
            poly = poly.add(&q);
            steps += s;
        }
        if steps > self.step_budget {
            return Err(YangianError::BudgetExceeded {
                budget: self.step_budget,
            });
        }
        Ok(Reduced { poly, steps })
    }

    /// Reduction of a single word. Pending terms live in one merged
    /// polynomial and the largest word rewrites first; replacements are
    /// strictly smaller in the monomial order, so coefficients of equal
    /// intermediate words combine (and cancel) instead of fanning out, and
    /// each distinct word is processed at most once. Truncation
    /// substitutions apply before pair rules, so collapsed letters never
    /// feed the pair rules.
    fn reduce_word(&self, letters: &[Generator]) -> Result<(NcPoly, u64), YangianError> {
        let mut result = NcPoly::zero();
        let mut steps: u64 = 0;
        let mut pending = NcPoly::term(Word::new(letters.to_vec()), Scalar::one());
        while let Some((word, c)) = pending.pop_leading() {
            let w = word.letters();
            if let Some(i) = self.first_truncated_letter(w) {
                steps += 1;
                if steps > self.step_budget {
                    return Err(YangianError::BudgetExceeded {
                        budget: self.step_budget,
                    });
                }
                let repl = self.letter_replacement(w[i])?;
                for (rw, rc) in repl.terms() {
                    pending.add_term(Word::new(splice(w, i, 1, rw.letters())), &c * rc);
                }
                continue;
            }
            if let Some(i) = w.windows(2).position(|p| out_of_order(p[0], p[1])) {
                steps += 1;
                if steps > self.step_budget {
                    return Err(YangianError::BudgetExceeded {
                        budget: self.step_budget,
                    });
                }
                let rule = self.table.expansion(w[i], w[i + 1]);
                for (rw, rc) in rule.terms() {
                    pending.add_term(Word::new(splice(w, i, 2, rw.letters())), &c * rc);
                }
                continue;
            }
            result.add_term(word, c);
        }
        Ok((result, steps))
    }

    fn first_truncated_letter(&self, w: &[Generator]) -> Option<usize> {
        if self.mode == Mode::Full {
            return None;
        }
        w.iter().position(|g| self.letter_truncates(*g))
    }

    fn letter_truncates(&self, g: Generator) -> bool {
        let top = 2 * self.n - 1;
        match g.family {
            Family::D1 => g.superscript >= 2,
            Family::E => g.superscript > top,
            Family::F => g.superscript >= 2,
            Family::D2 => {
                g.superscript > top
                    || (self.mode == Mode::TruncatedSo && g.superscript % 2 == 1)
            }
        }
    }

    fn letter_replacement(&self, g: Generator) -> Result<Arc<NcPoly>, YangianError> {
        let r = g.superscript;
        match g.family {
            Family::D1 => Ok(Arc::new(NcPoly::zero())),
            // from [D1^2, E^{r-1}] = 0: E^r = -D1^1 E^{r-1}
            Family::E => Ok(Arc::new(NcPoly::term(
                Word::new(vec![
                    Generator::new(Family::D1, 1),
                    Generator::new(Family::E, r - 1),
                ]),
                -Scalar::one(),
            ))),
            // from [D1^2, F^{r-1}] = 0: F^r = -F^{r-1} D1^1
            Family::F => Ok(Arc::new(NcPoly::term(
                Word::new(vec![
                    Generator::new(Family::F, r - 1),
                    Generator::new(Family::D1, 1),
                ]),
                -Scalar::one(),
            ))),
            Family::D2 => {
                if r > 2 * self.n - 1 {
                    self.eliminate_high_d2(r)
                } else {
                    Ok(Arc::clone(
                        self.so_subs
                            .get(&r)
                            .expect("substitutions precomputed at build"),
                    ))
                }
            }
        }
    }

    /// In a truncated quotient `D2^m` for `m > 2n - 1` is not a PBW
    /// generator. The E-F relation at total `m` reads
    /// `[E^{2n-1}, F^{s}] = bracket(m)` with `s = m - 2n + 2`, and the
    /// bracket carries `D2^m` linearly; replacing the generator `F^s` by its
    /// collapsed word and solving for `D2^m` expresses it through surviving
    /// letters. The synthesis is driven by the active rule table, reduced in
    /// this mode, and memoized; its steps are one-time costs not charged to
    /// callers.
    fn eliminate_high_d2(&self, m: u32) -> Result<Arc<NcPoly>, YangianError> {
        if let Some(p) = self.elim_cache.read().unwrap().get(&m) {
            return Ok(Arc::clone(p));
        }
        let top = 2 * self.n - 1;
        let s = m + 1 - top;
        debug_assert!(s >= 2);
        let e_letter = Generator::new(Family::E, top);
        let f_letter = Generator::new(Family::F, s);
        let bracket = self.table.bracket(e_letter, f_letter);
        let target = Word::single(Generator::new(Family::D2, m));
        let eps = bracket.coeff(&target);
        if eps.is_zero() {
            return Err(YangianError::RuleSynthesis(format!(
                "the E-F rule at total degree {m} carries no D2^{m} term"
            )));
        }
        let rest = bracket.sub(&NcPoly::term(target, eps.clone()));
        // collapsed image of the generator F^s: (-1)^{s-1} F^1 D1^1 ^ (s-1)
        let mut letters = vec![Generator::new(Family::F, 1)];
        letters.extend(std::iter::repeat(Generator::new(Family::D1, 1)).take((s - 1) as usize));
        let sign = if (s - 1) % 2 == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        let collapsed = NcPoly::term(Word::new(letters), sign);
        let e_poly = NcPoly::generator(e_letter);
        let expr = e_poly.commutator(&collapsed).sub(&rest);
        let reduced = self.reduce_with(&expr, Parallelism::Sequential)?;
        let result = Arc::new(reduced.poly.scale(&eps.recip()));
        self.elim_cache
            .write()
            .unwrap()
            .entry(m)
            .or_insert_with(|| Arc::clone(&result));
        Ok(result)
    }

    /// Parse and elaborate an element over this algebra's alphabet.
    /// `Z^r` expands through the central-element closed form.
    pub fn parse_element(&self, text: &str) -> Result<NcPoly, ElementError> {
        let expr = exprio::parse(text)?;
        Ok(self.elaborate(&expr)?)
    }

    pub fn elaborate(&self, expr: &Expr) -> Result<NcPoly, ElabError> {
        let ring = RingOps::<NcPoly> {
            one: NcPoly::one,
            constant: |c| NcPoly::constant(c.clone()),
            add: NcPoly::add,
            sub: NcPoly::sub,
            mul: NcPoly::mul,
        };
        exprio::eval(expr, &ring, &mut |atom, span| match atom {
            exprio::Atom::Gen(family, r) => {
                if *r == 0 {
                    return Err(ElabError::ZeroSuperscript { span });
                }
                let g = Generator::new(*family, *r);
                self.check_admissible(g).map_err(|e| {
                    let message = match e {
                        YangianError::Inadmissible { message, .. } => message,
                        other => other.to_string(),
                    };
                    ElabError::Inadmissible { message, span }
                })?;
                Ok(NcPoly::generator(g))
            }
            exprio::Atom::Central(r) => Ok(central::central_element(self.n, *r).poly),
            other => Err(ElabError::UnsupportedAtom {
                atom: exprio::atom_text(other),
                span,
            }),
        })
    }
}

fn splice(w: &[Generator], at: usize, removed: usize, insert: &[Generator]) -> Vec<Generator> {
    let mut out = Vec::with_capacity(w.len() - removed + insert.len());
    out.extend_from_slice(&w[..at]);
    out.extend_from_slice(insert);
    out.extend_from_slice(&w[at + removed..]);
    out
}

/// Solve `Z^{2r-1} = 0` for `D2^{2r-1}`, `r = 1..=n`, innermost first. The
/// series coefficient `Z^{2r-1}` carries `D2^{2r-1}` with coefficient
/// exactly 1 once `D1^{>=2}` and the previously solved odd letters are
/// substituted away.
fn compute_so_substitutions(n: u32) -> Result<BTreeMap<u32, Arc<NcPoly>>, YangianError> {
    let top = 2 * n - 1;
    let dv = DVars::new(top);
    let z = central_series_expand(&dv, n, top);
    let zero = crate::cpoly::CPoly::zero(dv.vars());
    let mut solved: BTreeMap<u32, crate::cpoly::CPoly> = BTreeMap::new();
    for r in 1..=n {
        let q = 2 * r - 1;
        let mut p = z[q as usize].clone();
        for t in 2..=top {
            p = p
                .substitute(dv.index(Family::D1, t), &zero)
                .expect("same variable set");
        }
        for (odd, image) in &solved {
            p = p
                .substitute(dv.index(Family::D2, *odd), image)
                .expect("same variable set");
        }
        let mut unit_exps = vec![0u32; dv.vars().len()];
        unit_exps[dv.index(Family::D2, q)] = 1;
        let coeff = p.coeff(&unit_exps);
        if !coeff.is_one() {
            return Err(YangianError::RuleSynthesis(format!(
                "Z^{q} is not unitriangular in D2^{q} (coefficient {coeff})"
            )));
        }
        let rest = p.sub(&crate::cpoly::CPoly::monomial(
            dv.vars(),
            unit_exps,
            Scalar::one(),
        ));
        solved.insert(q, rest.neg());
    }
    Ok(solved
        .into_iter()
        .map(|(q, p)| (q, Arc::new(dv.to_ncpoly(&p))))
        .collect())
}
