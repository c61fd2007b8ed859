use super::syntax::{Formula, Ident, Term};
use super::EvalError;

/// Truth of a closed bounded sentence in the standard model.
///
/// Bounded quantifiers are decided by enumerating `0..=bound`;
/// connectives short-circuit left to right.
pub fn eval_bounded(sentence: &Formula) -> Result<bool, EvalError> {
    if !sentence.is_delta0() {
        return Err(EvalError::NotBounded);
    }
    if let Some(x) = sentence.free_vars().into_iter().next() {
        return Err(EvalError::FreeVariable(x));
    }
    Evaluator::default().formula(sentence)
}

/// Value of a closed term.
pub fn eval_term(t: &Term) -> Result<u128, EvalError> {
    Evaluator::default().term(t)
}

#[derive(Default)]
struct Evaluator {
    env: Vec<(Ident, u128)>,
}

impl Evaluator {
    fn lookup(&self, x: &Ident) -> Result<u128, EvalError> {
        self.env
            .iter()
            .rev()
            .find(|(y, _)| y == x)
            .map(|(_, v)| *v)
            .ok_or_else(|| EvalError::FreeVariable(x.clone()))
    }

    fn term(&self, t: &Term) -> Result<u128, EvalError> {
        match t {
            Term::Zero => Ok(0),
            Term::Succ(_) => {
                let mut n: u128 = 0;
                let mut cur = t;
                while let Term::Succ(inner) = cur {
                    n += 1;
                    cur = inner;
                }
                self.term(cur)?.checked_add(n).ok_or(EvalError::Overflow)
            }
            Term::Add(a, b) => self.term(a)?.checked_add(self.term(b)?).ok_or(EvalError::Overflow),
            Term::Mul(a, b) => self.term(a)?.checked_mul(self.term(b)?).ok_or(EvalError::Overflow),
            Term::Var(x) => self.lookup(x),
        }
    }

    fn formula(&mut self, f: &Formula) -> Result<bool, EvalError> {
        crate::logic::deep(|| self.formula_inner(f))
    }

    fn formula_inner(&mut self, f: &Formula) -> Result<bool, EvalError> {
        match f {
            Formula::Eq(a, b) => Ok(self.term(a)? == self.term(b)?),
            Formula::Le(a, b) => Ok(self.term(a)? <= self.term(b)?),
            Formula::Not(g) => Ok(!self.formula(g)?),
            Formula::And(a, b) => Ok(self.formula(a)? && self.formula(b)?),
            Formula::Or(a, b) => Ok(self.formula(a)? || self.formula(b)?),
            Formula::Implies(a, b) => Ok(!self.formula(a)? || self.formula(b)?),
            Formula::BoundedForAll(x, bound, body) => {
                let limit = self.term(bound)?;
                self.quantify(x, limit, body, false)
            }
            Formula::BoundedExists(x, bound, body) => {
                let limit = self.term(bound)?;
                self.quantify(x, limit, body, true)
            }
            Formula::ForAll(..) | Formula::Exists(..) => Err(EvalError::NotBounded),
        }
    }

    /// Searches `0..=limit` for a value whose truth equals `want`.
    fn quantify(&mut self, x: &Ident, limit: u128, body: &Formula, want: bool) -> Result<bool, EvalError> {
        let mut v: u128 = 0;
        loop {
            self.env.push((x.clone(), v));
            let r = self.formula(body);
            self.env.pop();
            if r? == want {
                return Ok(want);
            }
            if v == limit {
                return Ok(!want);
            }
            v += 1;
        }
    }
}
