//! Deterministic canonical printing. Output always reparses to an equal
//! value: explicit `*` between factors, fractions as `p/q`, and the leading
//! term carries its sign inside the fraction since the grammar has no unary
//! minus outside fractions.

use crate::cpoly::CPoly;
use crate::ncpoly::NcPoly;
use crate::scalar::Scalar;

/// Render one term given its printed monomial (empty string for the
/// constant monomial) into the output buffer.
fn push_term(out: &mut String, coeff: &Scalar, monomial: &str) {
    let first = out.is_empty();
    let magnitude = coeff.abs();
    if first {
        if monomial.is_empty() {
            out.push_str(&coeff.to_string());
        } else if magnitude.is_one() {
            if coeff.is_negative() {
                out.push_str("-1 * ");
            }
            out.push_str(monomial);
        } else {
            out.push_str(&coeff.to_string());
            out.push_str(" * ");
            out.push_str(monomial);
        }
    } else {
        out.push_str(if coeff.is_negative() { " - " } else { " + " });
        if monomial.is_empty() {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(monomial);
        } else {
            out.push_str(&magnitude.to_string());
            out.push_str(" * ");
            out.push_str(monomial);
        }
    }
}

/// Highest canonical degree first; within a degree, words ascending in the
/// monomial order. The zero polynomial prints as `0`.
pub fn print_ncpoly(p: &NcPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|(wa, _), (wb, _)| {
        wb.degree()
            .cmp(&wa.degree())
            .then_with(|| wa.cmp(wb))
    });
    let mut out = String::new();
    for (word, coeff) in terms {
        let monomial = if word.is_empty() {
            String::new()
        } else {
            word.letters()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(" * ")
        };
        push_term(&mut out, coeff, &monomial);
    }
    out
}

/// Highest total degree first; within a degree, exponent vectors descending
/// lexicographically, so earlier variables lead.
pub fn print_cpoly(p: &CPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|(ea, _), (eb, _)| {
        let da: u64 = ea.exps().iter().map(|&x| u64::from(x)).sum();
        let db: u64 = eb.exps().iter().map(|&x| u64::from(x)).sum();
        db.cmp(&da).then_with(|| eb.exps().cmp(ea.exps()))
    });
    let vars = p.vars();
    let mut out = String::new();
    for (exps, coeff) in terms {
        let mut parts = Vec::new();
        for (i, &e) in exps.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars.name(i).to_string()),
                k => parts.push(format!("{}^{}", vars.name(i), k)),
            }
        }
        push_term(&mut out, coeff, &parts.join(" * "));
    }
    out
}

/// Re-render a parsed expression with normalized spacing; the output parses
/// back to the same tree.
pub fn render_expr(expr: &super::Expr) -> String {
    fn term(t: &super::Term, out: &mut String) {
        for (i, f) in t.factors.iter().enumerate() {
            if i > 0 {
                out.push_str(" * ");
            }
            factor(f, out);
        }
    }
    fn factor(f: &super::Factor, out: &mut String) {
        match f {
            super::Factor::Atom { atom, power, .. } => {
                out.push_str(&super::atom_text(atom));
                if let Some(k) = power {
                    out.push_str(&format!("^{k}"));
                }
            }
            super::Factor::Paren(inner) => {
                out.push('(');
                out.push_str(&render_expr(inner));
                out.push(')');
            }
            super::Factor::Commutator(a, b, _) => {
                out.push('[');
                out.push_str(&render_expr(a));
                out.push_str(", ");
                out.push_str(&render_expr(b));
                out.push(']');
            }
            super::Factor::Number { value, .. } => out.push_str(&value.to_string()),
        }
    }
    let mut out = String::new();
    term(&expr.first, &mut out);
    for (sign, t) in &expr.rest {
        out.push_str(match sign {
            super::Sign::Plus => " + ",
            super::Sign::Minus => " - ",
        });
        term(t, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cpoly::VarSet;
    use crate::ncpoly::{Family, Generator, Word};

    #[test]
    fn render_round_trips_the_tree() {
        for text in [
            "D1^1 * D2^1 - 3",
            "[E^3, F^1] + (u - v) * w^2",
            "e_3 - 1/2 * x_1^2",
        ] {
            let e = crate::exprio::parse(text).unwrap();
            let rendered = render_expr(&e);
            let e2 = crate::exprio::parse(&rendered).unwrap();
            assert_eq!(render_expr(&e2), rendered, "{text}");
        }
    }

    #[test]
    fn leading_term_first() {
        let mut p = NcPoly::zero();
        p.add_term(Word::empty(), Scalar::from_int(-3));
        p.add_term(
            Word::single(Generator::new(Family::D2, 1)),
            Scalar::one(),
        );
        p.add_term(
            Word::single(Generator::new(Family::D1, 1)),
            Scalar::one(),
        );
        assert_eq!(print_ncpoly(&p), "D1^1 + D2^1 - 3");
    }

    #[test]
    fn negative_leading_coefficients_reparse() {
        let mut p = NcPoly::zero();
        p.add_term(
            Word::single(Generator::new(Family::E, 3)),
            Scalar::from_int(-1),
        );
        assert_eq!(print_ncpoly(&p), "-1 * E^3");
        let mut q = NcPoly::zero();
        q.add_term(
            Word::single(Generator::new(Family::F, 2)),
            Scalar::fraction(-3, 2),
        );
        assert_eq!(print_ncpoly(&q), "-3/2 * F^2");
    }

    #[test]
    fn cpoly_rendering() {
        let vs = VarSet::new(vec!["x_1", "x_2"]);
        let x1 = CPoly::variable(&vs, 0);
        let x2 = CPoly::variable(&vs, 1);
        let p = x1.pow(2).sub(&x1.mul(&x2).scale(&Scalar::from_int(2)));
        assert_eq!(print_cpoly(&p), "x_1^2 - 2 * x_1 * x_2");
    }
}
