use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::SyntaxError;

/// Words that may not be used as variable names.
pub const RESERVED: &[&str] = &["S", "forall", "exists", "BY"];

/// A variable name: ASCII letter followed by letters, digits or `_`.
#[allow(clippy::derived_hash_with_manual_eq)]
#[derive(Clone, PartialOrd, Ord, Hash)]
pub struct Ident(Arc<str>);

impl Ident {
    pub fn new(name: &str) -> Result<Self, SyntaxError> {
        if Self::is_valid(name) {
            Ok(Ident(Arc::from(name)))
        } else {
            Err(SyntaxError::new(0, format!("invalid identifier `{name}`")))
        }
    }

    pub fn is_valid(name: &str) -> bool {
        let mut chars = name.chars();
        match chars.next() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return false,
        }
        chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !RESERVED.contains(&name)
    }

    pub(crate) fn from_valid(name: String) -> Self {
        debug_assert!(Self::is_valid(&name), "{name}");
        Ident(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl PartialEq for Ident {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ident {}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Terms of the language of arithmetic.
///
/// Children are reference counted so that numerals and other shared
/// subterms cost nothing to clone.
#[allow(clippy::derived_hash_with_manual_eq)]
#[derive(Clone, Debug, Hash)]
pub enum Term {
    Zero,
    Succ(Arc<Term>),
    Add(Arc<Term>, Arc<Term>),
    Mul(Arc<Term>, Arc<Term>),
    Var(Ident),
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        use Term::*;
        match (self, other) {
            (Zero, Zero) => true,
            (Succ(a), Succ(b)) => Arc::ptr_eq(a, b) || a == b,
            (Add(a1, b1), Add(a2, b2)) | (Mul(a1, b1), Mul(a2, b2)) => {
                (Arc::ptr_eq(a1, a2) || a1 == a2) && (Arc::ptr_eq(b1, b2) || b1 == b2)
            }
            (Var(x), Var(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Term {}

impl Term {
    pub fn var(x: &Ident) -> Term {
        Term::Var(x.clone())
    }

    pub fn succ(t: Term) -> Term {
        Term::Succ(Arc::new(t))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Arc::new(a), Arc::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Arc::new(a), Arc::new(b))
    }

    /// The value of this term if it is a numeral `S(...S(0)...)`.
    pub fn as_numeral(&self) -> Option<u64> {
        let mut n = 0u64;
        let mut cur = self;
        loop {
            match cur {
                Term::Zero => return Some(n),
                Term::Succ(inner) => {
                    n += 1;
                    cur = inner;
                }
                _ => return None,
            }
        }
    }

    pub fn occurs(&self, x: &Ident) -> bool {
        match self {
            Term::Zero => false,
            Term::Var(y) => y == x,
            Term::Succ(a) => a.occurs(x),
            Term::Add(a, b) | Term::Mul(a, b) => a.occurs(x) || b.occurs(x),
        }
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Term::Zero => true,
            Term::Var(_) => false,
            Term::Succ(a) => a.is_closed(),
            Term::Add(a, b) | Term::Mul(a, b) => a.is_closed() && b.is_closed(),
        }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<Ident>) {
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                Term::Zero => {}
                Term::Var(x) => {
                    out.insert(x.clone());
                }
                Term::Succ(a) => stack.push(a),
                Term::Add(a, b) | Term::Mul(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
            }
        }
    }
}

/// The closed term denoting `n`: `Zero` under `n` successors.
pub fn numeral(n: u64) -> Term {
    let mut t = Term::Zero;
    for _ in 0..n {
        t = Term::succ(t);
    }
    t
}

/// A natural number together with its numeral term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numeral {
    value: u64,
    term: Term,
}

impl Numeral {
    pub fn new(value: u64) -> Self {
        Numeral { value, term: numeral(value) }
    }

    pub fn decode(term: &Term) -> Option<Self> {
        term.as_numeral().map(|value| Numeral { value, term: term.clone() })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn term(&self) -> &Term {
        &self.term
    }
}

/// Builds numerals that share their tails, so that a formula mentioning
/// many large numerals stays small in memory.
#[derive(Debug, Default)]
pub struct NumeralCache {
    terms: Vec<Term>,
}

impl NumeralCache {
    pub fn new() -> Self {
        NumeralCache { terms: vec![Term::Zero] }
    }

    pub fn get(&mut self, n: u64) -> Term {
        if self.terms.is_empty() {
            self.terms.push(Term::Zero);
        }
        let n = n as usize;
        while self.terms.len() <= n {
            let prev = self.terms.last().cloned().unwrap_or(Term::Zero);
            self.terms.push(Term::succ(prev));
        }
        self.terms[n].clone()
    }
}

/// Formulas of first-order arithmetic with bounded quantifiers as
/// first-class nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    Le(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    ForAll(Ident, Box<Formula>),
    Exists(Ident, Box<Formula>),
    /// `forall x <= bound. body`; the bound may not mention `x`.
    BoundedForAll(Ident, Term, Box<Formula>),
    BoundedExists(Ident, Term, Box<Formula>),
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Self {
        Formula::Eq(a, b)
    }

    pub fn le(a: Term, b: Term) -> Self {
        Formula::Le(a, b)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn forall(x: &Ident, body: Formula) -> Self {
        Formula::ForAll(x.clone(), Box::new(body))
    }

    pub fn exists(x: &Ident, body: Formula) -> Self {
        Formula::Exists(x.clone(), Box::new(body))
    }

    pub fn bounded_forall(x: &Ident, bound: Term, body: Formula) -> Self {
        Formula::BoundedForAll(x.clone(), bound, Box::new(body))
    }

    pub fn bounded_exists(x: &Ident, bound: Term, body: Formula) -> Self {
        Formula::BoundedExists(x.clone(), bound, Box::new(body))
    }

    /// `0 = 0`
    pub fn top() -> Self {
        Formula::Eq(Term::Zero, Term::Zero)
    }

    /// `~0 = 0`
    pub fn bottom() -> Self {
        Formula::not(Formula::top())
    }

    /// Right-nested conjunction; the empty conjunction is `0 = 0`.
    pub fn conj(parts: Vec<Formula>) -> Self {
        let mut it = parts.into_iter().rev();
        match it.next() {
            None => Formula::top(),
            Some(last) => it.fold(last, |acc, f| Formula::and(f, acc)),
        }
    }

    /// Right-nested disjunction; the empty disjunction is `~0 = 0`.
    pub fn disj(parts: Vec<Formula>) -> Self {
        let mut it = parts.into_iter().rev();
        match it.next() {
            None => Formula::bottom(),
            Some(last) => it.fold(last, |acc, f| Formula::or(f, acc)),
        }
    }

    /// `(cond & then) | (~cond & otherwise)`
    pub fn ite(cond: Formula, then: Formula, otherwise: Formula) -> Self {
        Formula::or(
            Formula::and(cond.clone(), then),
            Formula::and(Formula::not(cond), otherwise),
        )
    }

    pub fn free_vars(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Ident>, out: &mut BTreeSet<Ident>) {
        crate::logic::deep(|| self.collect_free_inner(bound, out))
    }

    fn collect_free_inner(&self, bound: &mut Vec<Ident>, out: &mut BTreeSet<Ident>) {
        let add_term = |t: &Term, bound: &Vec<Ident>, out: &mut BTreeSet<Ident>| {
            let mut vs = BTreeSet::new();
            t.collect_vars(&mut vs);
            out.extend(vs.into_iter().filter(|v| !bound.contains(v)));
        };
        match self {
            Formula::Eq(a, b) | Formula::Le(a, b) => {
                add_term(a, bound, out);
                add_term(b, bound, out);
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::ForAll(x, f) | Formula::Exists(x, f) => {
                bound.push(x.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
            Formula::BoundedForAll(x, t, f) | Formula::BoundedExists(x, t, f) => {
                add_term(t, bound, out);
                bound.push(x.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_free(&self, x: &Ident) -> bool {
        match self {
            Formula::Eq(a, b) | Formula::Le(a, b) => a.occurs(x) || b.occurs(x),
            Formula::Not(f) => f.is_free(x),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.is_free(x) || b.is_free(x)
            }
            Formula::ForAll(y, f) | Formula::Exists(y, f) => y != x && f.is_free(x),
            Formula::BoundedForAll(y, t, f) | Formula::BoundedExists(y, t, f) => {
                t.occurs(x) || (y != x && f.is_free(x))
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Every quantifier is bounded and no bound mentions its own variable.
    pub fn is_delta0(&self) -> bool {
        crate::logic::deep(|| self.is_delta0_inner())
    }

    fn is_delta0_inner(&self) -> bool {
        match self {
            Formula::Eq(..) | Formula::Le(..) => true,
            Formula::Not(f) => f.is_delta0(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.is_delta0() && b.is_delta0()
            }
            Formula::ForAll(..) | Formula::Exists(..) => false,
            Formula::BoundedForAll(x, t, f) | Formula::BoundedExists(x, t, f) => {
                !t.occurs(x) && f.is_delta0()
            }
        }
    }

    /// Number of nodes, counting terms.
    pub fn size(&self) -> usize {
        fn term_size(t: &Term) -> usize {
            match t {
                Term::Zero | Term::Var(_) => 1,
                Term::Succ(a) => 1 + term_size(a),
                Term::Add(a, b) | Term::Mul(a, b) => 1 + term_size(a) + term_size(b),
            }
        }
        match self {
            Formula::Eq(a, b) | Formula::Le(a, b) => 1 + term_size(a) + term_size(b),
            Formula::Not(f) | Formula::ForAll(_, f) | Formula::Exists(_, f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                1 + a.size() + b.size()
            }
            Formula::BoundedForAll(_, t, f) | Formula::BoundedExists(_, t, f) => {
                1 + term_size(t) + f.size()
            }
        }
    }
}
