//! Text grammar, parser and printer for algebra elements, plus the JSON
//! report schema shared by the verification commands.
//!
//! Grammar (whitespace-insensitive, explicit `*`):
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ['^' int] | '(' expr ')' | '[' expr ',' expr ']' | fraction
//! atom     := ('D1'|'D2'|'E'|'F'|'Z') '^' int | 'e_' int | 'x_' int | 'u' | 'v' | 'w'
//! fraction := '-'? digits ['/' digits]
//! ```
//!
//! `[a, b]` is commutator sugar for `a*b - b*a`.

mod parse;
mod print;
mod report;

pub use parse::{parse, ParseError};
pub use print::{print_cpoly, print_ncpoly, render_expr};
pub use report::{Report, ReportStatus, Witness, SCHEMA_VERSION};

use crate::ncpoly::{Family, Generator, NcPoly, Word};
use crate::scalar::Scalar;
use thiserror::Error;

/// 1-based source position.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Span {
    pub line: u32,
    pub col: u32,
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Atom {
    /// `D1^r`, `D2^r`, `E^r`, `F^r`
    Gen(Family, u32),
    /// `Z^r`; expands through the central-element closed form at elaboration.
    Central(u32),
    /// `e_j`
    ElemSym(u32),
    /// `x_i`
    Coord(u32),
    U,
    V,
    W,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, PartialEq, Debug)]
pub enum Factor {
    Atom {
        atom: Atom,
        power: Option<u32>,
        span: Span,
    },
    Paren(Box<Expr>),
    Commutator(Box<Expr>, Box<Expr>, Span),
    Number {
        value: Scalar,
        span: Span,
    },
}

/// A product of factors.
#[derive(Clone, PartialEq, Debug)]
pub struct Term {
    pub factors: Vec<Factor>,
}

/// A signed sum of terms.
#[derive(Clone, PartialEq, Debug)]
pub struct Expr {
    pub first: Term,
    pub rest: Vec<(Sign, Term)>,
    pub span: Span,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ElabError {
    #[error("{span}: atom `{atom}` is not available in this context")]
    UnsupportedAtom { atom: String, span: Span },
    #[error("{span}: generator superscripts must be positive")]
    ZeroSuperscript { span: Span },
    #[error("{span}: {message}")]
    Inadmissible { message: String, span: Span },
}

pub(crate) fn atom_text(atom: &Atom) -> String {
    match atom {
        Atom::Gen(fam, r) => format!("{}^{}", fam.label(), r),
        Atom::Central(r) => format!("Z^{r}"),
        Atom::ElemSym(j) => format!("e_{j}"),
        Atom::Coord(i) => format!("x_{i}"),
        Atom::U => "u".to_string(),
        Atom::V => "v".to_string(),
        Atom::W => "w".to_string(),
    }
}

/// Evaluate an expression in any ring, given an atom interpretation.
/// Powers are repeated products and `[a, b]` evaluates to `a*b - b*a`.
pub fn eval<T>(
    expr: &Expr,
    ring: &RingOps<T>,
    atom_fn: &mut dyn FnMut(&Atom, Span) -> Result<T, ElabError>,
) -> Result<T, ElabError> {
    let mut acc = eval_term(&expr.first, ring, atom_fn)?;
    for (sign, term) in &expr.rest {
        let t = eval_term(term, ring, atom_fn)?;
        acc = match sign {
            Sign::Plus => (ring.add)(&acc, &t),
            Sign::Minus => (ring.sub)(&acc, &t),
        };
    }
    Ok(acc)
}

fn eval_term<T>(
    term: &Term,
    ring: &RingOps<T>,
    atom_fn: &mut dyn FnMut(&Atom, Span) -> Result<T, ElabError>,
) -> Result<T, ElabError> {
    let mut acc = (ring.one)();
    for factor in &term.factors {
        let value = match factor {
            Factor::Atom { atom, power, span } => {
                let base = atom_fn(atom, *span)?;
                match power {
                    None => base,
                    Some(k) => {
                        let mut p = (ring.one)();
                        for _ in 0..*k {
                            p = (ring.mul)(&p, &base);
                        }
                        p
                    }
                }
            }
            Factor::Paren(inner) => eval(inner, ring, atom_fn)?,
            Factor::Commutator(a, b, _) => {
                let a = eval(a, ring, atom_fn)?;
                let b = eval(b, ring, atom_fn)?;
                (ring.sub)(&(ring.mul)(&a, &b), &(ring.mul)(&b, &a))
            }
            Factor::Number { value, .. } => (ring.constant)(value),
        };
        acc = (ring.mul)(&acc, &value);
    }
    Ok(acc)
}

/// The ring operations [`eval`] needs, packaged as plain function pointers so
/// both commutative and noncommutative targets share one evaluator.
pub struct RingOps<T> {
    pub one: fn() -> T,
    pub constant: fn(&Scalar) -> T,
    pub add: fn(&T, &T) -> T,
    pub sub: fn(&T, &T) -> T,
    pub mul: fn(&T, &T) -> T,
}

/// Elaborate into the free algebra. `Z`, `e_j`, `x_i`, `u`, `v`, `w` atoms
/// are rejected; admissibility against a particular algebra is the caller's
/// concern.
pub fn elaborate_free_nc(expr: &Expr) -> Result<NcPoly, ElabError> {
    let ring = RingOps::<NcPoly> {
        one: NcPoly::one,
        constant: |c| NcPoly::constant(c.clone()),
        add: NcPoly::add,
        sub: NcPoly::sub,
        mul: NcPoly::mul,
    };
    eval(expr, &ring, &mut |atom, span| match atom {
        Atom::Gen(family, r) => {
            if *r == 0 {
                return Err(ElabError::ZeroSuperscript { span });
            }
            Ok(NcPoly::term(
                Word::single(Generator::new(*family, *r)),
                Scalar::one(),
            ))
        }
        other => Err(ElabError::UnsupportedAtom {
            atom: atom_text(other),
            span,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::Family;

    #[test]
    fn parse_product_minus_constant() {
        let e = parse("D1^1 * D2^1 - 3").unwrap();
        let p = elaborate_free_nc(&e).unwrap();
        let d1 = Generator::new(Family::D1, 1);
        let d2 = Generator::new(Family::D2, 1);
        let mut expected = NcPoly::term(Word::new(vec![d1, d2]), Scalar::one());
        expected.add_term(Word::empty(), Scalar::from_int(-3));
        assert_eq!(p, expected);
    }

    #[test]
    fn commutator_sugar() {
        let e = parse("[E^3, F^1]").unwrap();
        let p = elaborate_free_nc(&e).unwrap();
        let direct = elaborate_free_nc(&parse("E^3*F^1 - F^1*E^3").unwrap()).unwrap();
        assert_eq!(p, direct);
    }

    #[test]
    fn error_positions() {
        let err = parse("D1^1 +\n  * 2").unwrap_err();
        assert_eq!(err.span.line, 2);
        assert_eq!(err.span.col, 3);
    }

    #[test]
    fn unsupported_atom_in_nc_context() {
        let e = parse("x_1 + 2").unwrap();
        let err = elaborate_free_nc(&e).unwrap_err();
        assert!(matches!(err, ElabError::UnsupportedAtom { .. }));
    }

    #[test]
    fn print_zero() {
        assert_eq!(print_ncpoly(&NcPoly::zero()), "0");
    }

    #[test]
    fn print_parse_round_trip_small() {
        let texts = [
            "D1^1 + D2^1 - 3",
            "-1 * E^3 * F^1 + 1/2",
            "2/3 * D2^2 - D1^1 * D1^1",
        ];
        for t in texts {
            let p = elaborate_free_nc(&parse(t).unwrap()).unwrap();
            let printed = print_ncpoly(&p);
            let q = elaborate_free_nc(&parse(&printed).unwrap()).unwrap();
            assert_eq!(p, q, "round trip failed for {t}: printed {printed}");
        }
    }
}
