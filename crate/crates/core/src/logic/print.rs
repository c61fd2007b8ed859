//! Canonical printing with the fewest parentheses the parser needs.
//!
//! `+`, `*`, `&` and `|` associate to the left, `->` to the right.
//! Quantifiers extend as far right as possible, so they are always
//! parenthesised when they appear as an operand.

use std::fmt::{self, Display, Write};

use super::syntax::{Formula, Term};

const T_ADD: u8 = 1;
const T_MUL: u8 = 2;
const T_ATOM: u8 = 3;

fn term_prec(t: &Term) -> u8 {
    match t {
        Term::Add(..) => T_ADD,
        Term::Mul(..) => T_MUL,
        _ => T_ATOM,
    }
}

fn write_term(out: &mut impl Write, t: &Term, min: u8) -> fmt::Result {
    let paren = term_prec(t) < min;
    if paren {
        out.write_char('(')?;
    }
    match t {
        Term::Zero => out.write_char('0')?,
        Term::Var(x) => out.write_str(x.as_str())?,
        Term::Succ(_) => {
            let mut depth = 0;
            let mut cur = t;
            while let Term::Succ(inner) = cur {
                out.write_str("S(")?;
                depth += 1;
                cur = inner;
            }
            write_term(out, cur, 0)?;
            for _ in 0..depth {
                out.write_char(')')?;
            }
        }
        Term::Add(a, b) => {
            write_term(out, a, T_ADD)?;
            out.write_str(" + ")?;
            write_term(out, b, T_MUL)?;
        }
        Term::Mul(a, b) => {
            write_term(out, a, T_MUL)?;
            out.write_str(" * ")?;
            write_term(out, b, T_ATOM)?;
        }
    }
    if paren {
        out.write_char(')')?;
    }
    Ok(())
}

const F_QUANT: u8 = 0;
const F_IMP: u8 = 1;
const F_OR: u8 = 2;
const F_AND: u8 = 3;
const F_NOT: u8 = 4;
const F_ATOM: u8 = 5;

fn formula_prec(f: &Formula) -> u8 {
    match f {
        Formula::Eq(..) | Formula::Le(..) => F_ATOM,
        Formula::Not(_) => F_NOT,
        Formula::And(..) => F_AND,
        Formula::Or(..) => F_OR,
        Formula::Implies(..) => F_IMP,
        _ => F_QUANT,
    }
}

fn write_formula(out: &mut impl Write, f: &Formula, min: u8) -> fmt::Result {
    crate::logic::deep(|| write_formula_inner(out, f, min))
}

fn write_formula_inner(out: &mut impl Write, f: &Formula, min: u8) -> fmt::Result {
    let paren = formula_prec(f) < min;
    if paren {
        out.write_char('(')?;
    }
    match f {
        Formula::Eq(a, b) => {
            write_term(out, a, 0)?;
            out.write_str(" = ")?;
            write_term(out, b, 0)?;
        }
        Formula::Le(a, b) => {
            write_term(out, a, 0)?;
            out.write_str(" <= ")?;
            write_term(out, b, 0)?;
        }
        Formula::Not(g) => {
            out.write_char('~')?;
            write_formula(out, g, F_NOT)?;
        }
        Formula::And(a, b) => {
            write_formula(out, a, F_AND)?;
            out.write_str(" & ")?;
            write_formula(out, b, F_NOT)?;
        }
        Formula::Or(a, b) => {
            write_formula(out, a, F_OR)?;
            out.write_str(" | ")?;
            write_formula(out, b, F_AND)?;
        }
        Formula::Implies(a, b) => {
            write_formula(out, a, F_OR)?;
            out.write_str(" -> ")?;
            write_formula(out, b, F_IMP)?;
        }
        Formula::ForAll(x, g) => {
            write!(out, "forall {x}. ")?;
            write_formula(out, g, 0)?;
        }
        Formula::Exists(x, g) => {
            write!(out, "exists {x}. ")?;
            write_formula(out, g, 0)?;
        }
        Formula::BoundedForAll(x, t, g) => {
            write!(out, "forall {x} <= ")?;
            write_term(out, t, 0)?;
            out.write_str(". ")?;
            write_formula(out, g, 0)?;
        }
        Formula::BoundedExists(x, t, g) => {
            write!(out, "exists {x} <= ")?;
            write_term(out, t, 0)?;
            out.write_str(". ")?;
            write_formula(out, g, 0)?;
        }
    }
    if paren {
        out.write_char(')')?;
    }
    Ok(())
}

impl Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self, 0)
    }
}

impl Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, 0)
    }
}
