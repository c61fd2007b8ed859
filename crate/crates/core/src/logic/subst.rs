use std::collections::BTreeSet;
use std::sync::Arc;

use super::syntax::{Formula, Ident, Term};

/// Replaces every occurrence of `x` in `t` by `by`.
pub fn substitute_term(t: &Term, x: &Ident, by: &Term) -> Term {
    match t {
        Term::Zero => Term::Zero,
        Term::Var(y) if y == x => by.clone(),
        Term::Var(_) => t.clone(),
        Term::Succ(a) => {
            if a.occurs(x) {
                Term::succ(substitute_term(a, x, by))
            } else {
                t.clone()
            }
        }
        Term::Add(a, b) => Term::Add(subst_arc(a, x, by), subst_arc(b, x, by)),
        Term::Mul(a, b) => Term::Mul(subst_arc(a, x, by), subst_arc(b, x, by)),
    }
}

fn subst_arc(t: &Arc<Term>, x: &Ident, by: &Term) -> Arc<Term> {
    if t.occurs(x) {
        Arc::new(substitute_term(t, x, by))
    } else {
        Arc::clone(t)
    }
}

/// A name based on `base` that is not in `avoid`.
pub fn fresh_ident(base: &Ident, avoid: &BTreeSet<Ident>) -> Ident {
    (1..)
        .map(|k| Ident::from_valid(format!("{}_{k}", base.as_str())))
        .find(|cand| !avoid.contains(cand))
        .expect("unbounded supply of names")
}

/// Capture-avoiding substitution of `by` for the free occurrences of `x`.
///
/// A binder whose variable occurs in `by` is renamed before descending,
/// so no variable of `by` is ever captured.
pub fn substitute(phi: &Formula, x: &Ident, by: &Term) -> Formula {
    let mut by_vars = BTreeSet::new();
    by.collect_vars(&mut by_vars);
    subst(phi, x, by, &by_vars)
}

fn subst(phi: &Formula, x: &Ident, by: &Term, by_vars: &BTreeSet<Ident>) -> Formula {
    crate::logic::deep(|| subst_inner(phi, x, by, by_vars))
}

fn subst_inner(phi: &Formula, x: &Ident, by: &Term, by_vars: &BTreeSet<Ident>) -> Formula {
    match phi {
        Formula::Eq(a, b) => Formula::Eq(substitute_term(a, x, by), substitute_term(b, x, by)),
        Formula::Le(a, b) => Formula::Le(substitute_term(a, x, by), substitute_term(b, x, by)),
        Formula::Not(f) => Formula::not(subst(f, x, by, by_vars)),
        Formula::And(a, b) => Formula::and(subst(a, x, by, by_vars), subst(b, x, by, by_vars)),
        Formula::Or(a, b) => Formula::or(subst(a, x, by, by_vars), subst(b, x, by, by_vars)),
        Formula::Implies(a, b) => {
            Formula::implies(subst(a, x, by, by_vars), subst(b, x, by, by_vars))
        }
        Formula::ForAll(y, body) | Formula::Exists(y, body) => {
            let (y, body) = subst_binder(y, body, x, by, by_vars);
            match phi {
                Formula::ForAll(..) => Formula::ForAll(y, Box::new(body)),
                _ => Formula::Exists(y, Box::new(body)),
            }
        }
        Formula::BoundedForAll(y, bound, body) | Formula::BoundedExists(y, bound, body) => {
            // the bound lies outside the scope of `y`
            let bound = substitute_term(bound, x, by);
            let (y, body) = subst_binder(y, body, x, by, by_vars);
            match phi {
                Formula::BoundedForAll(..) => Formula::BoundedForAll(y, bound, Box::new(body)),
                _ => Formula::BoundedExists(y, bound, Box::new(body)),
            }
        }
    }
}

fn subst_binder(
    y: &Ident,
    body: &Formula,
    x: &Ident,
    by: &Term,
    by_vars: &BTreeSet<Ident>,
) -> (Ident, Formula) {
    if y == x {
        return (y.clone(), body.clone());
    }
    if by_vars.contains(y) && body.is_free(x) {
        let mut avoid = body.free_vars();
        avoid.extend(by_vars.iter().cloned());
        avoid.insert(x.clone());
        let renamed = fresh_ident(y, &avoid);
        let body = substitute(body, y, &Term::Var(renamed.clone()));
        let body = subst(&body, x, by, by_vars);
        (renamed, body)
    } else {
        (y.clone(), subst(body, x, by, by_vars))
    }
}
