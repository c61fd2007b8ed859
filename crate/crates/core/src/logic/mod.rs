//! Syntax of first-order arithmetic, its text form, substitution and the
//! decision procedure for bounded sentences.

mod eval;
mod parse;
mod print;
mod subst;
mod syntax;

use thiserror::Error;

pub use eval::{eval_bounded, eval_term};
pub use parse::{parse_formula, parse_term};
pub use subst::{fresh_ident, substitute, substitute_term};
pub use syntax::{numeral, Formula, Ident, Numeral, NumeralCache, Term, RESERVED};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct SyntaxError {
    pub offset: usize,
    pub message: String,
}

impl SyntaxError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        SyntaxError { offset, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("sentence contains an unbounded quantifier")]
    NotBounded,
    #[error("free variable `{0}`")]
    FreeVariable(Ident),
    #[error("arithmetic overflow while evaluating")]
    Overflow,
}

/// Parses `text` and reports the variables left free, which callers
/// expecting a sentence usually want to warn about.
pub fn parse_with_free_vars(text: &str) -> Result<(Formula, Vec<Ident>), SyntaxError> {
    let f = parse_formula(text)?;
    let free = f.free_vars().into_iter().collect();
    Ok((f, free))
}

/// Runs `f` with at least 64 KiB of stack left, switching to a fresh
/// segment when the current one is nearly used up.
pub(crate) fn deep<R>(f: impl FnOnce() -> R) -> R {
    stacker::maybe_grow(64 * 1024, 4 * 1024 * 1024, f)
}
