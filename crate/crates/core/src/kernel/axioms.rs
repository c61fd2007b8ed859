use crate::logic::{substitute, Formula, Ident, Term};

use super::LogicalScheme;

fn v(name: &str) -> Ident {
    Ident::new(name).expect("fixed name")
}

/// The finite Peano axioms over `0, S, +, *, <=`.
///
/// Order is fixed: rule `PaAxiom(i)` refers to index `i`.
pub fn pa_axioms() -> Vec<Formula> {
    let (x, y, z) = (v("x"), v("y"), v("z"));
    let (tx, ty, tz) = (Term::var(&x), Term::var(&y), Term::var(&z));
    let all2 = |body| Formula::forall(&x, Formula::forall(&y, body));
    vec![
        Formula::forall(&x, Formula::not(Formula::eq(Term::succ(tx.clone()), Term::Zero))),
        all2(Formula::implies(
            Formula::eq(Term::succ(tx.clone()), Term::succ(ty.clone())),
            Formula::eq(tx.clone(), ty.clone()),
        )),
        Formula::forall(&x, Formula::eq(Term::add(tx.clone(), Term::Zero), tx.clone())),
        all2(Formula::eq(
            Term::add(tx.clone(), Term::succ(ty.clone())),
            Term::succ(Term::add(tx.clone(), ty.clone())),
        )),
        Formula::forall(&x, Formula::eq(Term::mul(tx.clone(), Term::Zero), Term::Zero)),
        all2(Formula::eq(
            Term::mul(tx.clone(), Term::succ(ty.clone())),
            Term::add(Term::mul(tx.clone(), ty.clone()), tx.clone()),
        )),
        all2(Formula::implies(
            Formula::le(tx.clone(), ty.clone()),
            Formula::exists(&z, Formula::eq(Term::add(tx.clone(), tz.clone()), ty.clone())),
        )),
        all2(Formula::forall(
            &z,
            Formula::implies(
                Formula::eq(Term::add(tx.clone(), tz), ty.clone()),
                Formula::le(tx, ty),
            ),
        )),
    ]
}

/// `(phi[0/x] & forall x. (phi -> phi[S(x)/x])) -> forall x. phi`
pub fn induction_axiom(phi: &Formula, x: &Ident) -> Formula {
    let base = substitute(phi, x, &Term::Zero);
    let step = substitute(phi, x, &Term::succ(Term::var(x)));
    Formula::implies(
        Formula::and(base, Formula::forall(x, Formula::implies(phi.clone(), step))),
        Formula::forall(x, phi.clone()),
    )
}

pub(super) fn is_induction_instance(f: &Formula) -> bool {
    let Formula::Implies(_, rhs) = f else { return false };
    let Formula::ForAll(x, phi) = rhs.as_ref() else { return false };
    induction_axiom(phi, x) == *f
}

fn imp(f: &Formula) -> Option<(&Formula, &Formula)> {
    match f {
        Formula::Implies(a, b) => Some((a, b)),
        _ => None,
    }
}

/// Whether `f` is an instance of `scheme`, with the side conditions.
pub(super) fn matches_scheme(scheme: &LogicalScheme, f: &Formula) -> bool {
    use Formula as F;
    use LogicalScheme::*;
    let Some((lhs, rhs)) = imp(f) else { return false };
    match scheme {
        K => imp(rhs).is_some_and(|(_, a)| a == lhs),
        S => (|| {
            let (a, bc) = imp(lhs)?;
            let (b, c) = imp(bc)?;
            let (ab, ac) = imp(rhs)?;
            let (a2, b2) = imp(ab)?;
            let (a3, c2) = imp(ac)?;
            Some(a == a2 && a == a3 && b == b2 && c == c2)
        })()
        .unwrap_or(false),
        Contraposition => (|| {
            let (na, nb) = imp(lhs)?;
            let (b, a) = imp(rhs)?;
            Some(*na == F::not(a.clone()) && *nb == F::not(b.clone()))
        })()
        .unwrap_or(false),
        AndIntro => (|| {
            let (b, ab) = imp(rhs)?;
            Some(*ab == F::and(lhs.clone(), b.clone()))
        })()
        .unwrap_or(false),
        AndElimLeft => matches!(lhs, F::And(a, _) if **a == *rhs),
        AndElimRight => matches!(lhs, F::And(_, b) if **b == *rhs),
        OrIntroLeft => matches!(rhs, F::Or(a, _) if **a == *lhs),
        OrIntroRight => matches!(rhs, F::Or(_, b) if **b == *lhs),
        OrElim => (|| {
            let (a, c) = imp(lhs)?;
            let (bc, abc) = imp(rhs)?;
            let (b, c2) = imp(bc)?;
            let (ab, c3) = imp(abc)?;
            Some(c == c2 && c == c3 && *ab == F::or(a.clone(), b.clone()))
        })()
        .unwrap_or(false),
        ExFalso => matches!(lhs, F::Not(a) if imp(rhs).is_some_and(|(a2, _)| **a == *a2)),
        ExistsIntro(t) => match rhs {
            F::Exists(x, body) => substitute(body, x, t) == *lhs,
            _ => false,
        },
        ExistsElim => (|| {
            let F::ForAll(x, ab) = lhs else { return None };
            let (a, b) = imp(ab)?;
            let (ex, b2) = imp(rhs)?;
            let F::Exists(x2, a2) = ex else { return None };
            Some(x == x2 && **a2 == *a && b == b2 && !b.is_free(x))
        })()
        .unwrap_or(false),
        ForallDist => (|| {
            let F::ForAll(x, ab) = lhs else { return None };
            let (a, b) = imp(ab)?;
            let (a2, fb) = imp(rhs)?;
            let F::ForAll(x2, b2) = fb else { return None };
            Some(x == x2 && a == a2 && **b2 == *b && !a.is_free(x))
        })()
        .unwrap_or(false),
        BoundedForallUnfold => match lhs {
            F::BoundedForAll(x, t, a) => {
                *rhs == F::forall(x, F::implies(F::le(Term::var(x), t.clone()), (**a).clone()))
            }
            _ => false,
        },
        BoundedForallFold => match rhs {
            F::BoundedForAll(x, t, a) if !t.occurs(x) => {
                *lhs == F::forall(x, F::implies(F::le(Term::var(x), t.clone()), (**a).clone()))
            }
            _ => false,
        },
        BoundedExistsUnfold => match lhs {
            F::BoundedExists(x, t, a) => {
                *rhs == F::exists(x, F::and(F::le(Term::var(x), t.clone()), (**a).clone()))
            }
            _ => false,
        },
        BoundedExistsFold => match rhs {
            F::BoundedExists(x, t, a) if !t.occurs(x) => {
                *lhs == F::exists(x, F::and(F::le(Term::var(x), t.clone()), (**a).clone()))
            }
            _ => false,
        },
    }
}

/// Reflexivity, symmetry, transitivity and congruence for `S`, `+`, `*`
/// and `<=`.
pub(super) fn is_equality_axiom(f: &Formula) -> bool {
    use Formula as F;
    if let F::Eq(s, t) = f {
        return s == t;
    }
    let Some((F::Eq(s, t), rhs)) = imp(f) else { return false };
    match rhs {
        F::Eq(a, b) => {
            // symmetry
            (a == t && b == s)
                || matches!((a, b), (Term::Succ(a), Term::Succ(b)) if **a == *s && **b == *t)
                || matches!((a, b), (Term::Add(a1, a2), Term::Add(b1, b2))
                    if (**a1 == *s && **b1 == *t && a2 == b2) || (**a2 == *s && **b2 == *t && a1 == b1))
                || matches!((a, b), (Term::Mul(a1, a2), Term::Mul(b1, b2))
                    if (**a1 == *s && **b1 == *t && a2 == b2) || (**a2 == *s && **b2 == *t && a1 == b1))
        }
        F::Implies(p, q) => match (p.as_ref(), q.as_ref()) {
            // transitivity: s = t -> (t = u -> s = u)
            (F::Eq(t2, u), F::Eq(s2, u2)) => t2 == t && s2 == s && u == u2,
            (F::Le(p1, p2), F::Le(q1, q2)) => {
                (p1 == s && q1 == t && p2 == q2) || (p2 == s && q2 == t && p1 == q1)
            }
            _ => false,
        },
        _ => false,
    }
}
