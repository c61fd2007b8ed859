//! Random terms, formulas and proofs shared by the integration tests.
#![allow(dead_code)]

use peano_omega::kernel::{LogicalScheme, Proof, ProofStep, Rule};
use peano_omega::logic::{eval_bounded, numeral, substitute, Formula, Ident, Term};
use peano_omega::kernel::pa_axioms;
use rand::seq::SliceRandom;
use rand::Rng;

pub const VARS: [&str; 4] = ["x", "y", "z", "u"];

pub fn ident(s: &str) -> Ident {
    Ident::new(s).unwrap()
}

/// A term over `vars` whose closed instances stay small.
pub fn term(rng: &mut impl Rng, depth: u32, vars: &[Ident]) -> Term {
    let leaf = depth == 0 || rng.gen_bool(0.4);
    if leaf {
        return if !vars.is_empty() && rng.gen_bool(0.5) {
            Term::var(vars.choose(rng).unwrap())
        } else {
            numeral(rng.gen_range(0..4))
        };
    }
    match rng.gen_range(0..3) {
        0 => Term::succ(term(rng, depth - 1, vars)),
        1 => Term::add(term(rng, depth - 1, vars), term(rng, depth - 1, vars)),
        _ => Term::mul(term(rng, depth - 1, vars), term(rng, depth - 1, vars)),
    }
}

pub fn closed_term(rng: &mut impl Rng, depth: u32) -> Term {
    term(rng, depth, &[])
}

fn atom(rng: &mut impl Rng, vars: &[Ident]) -> Formula {
    let (a, b) = (term(rng, 2, vars), term(rng, 2, vars));
    if rng.gen_bool(0.5) {
        Formula::eq(a, b)
    } else {
        Formula::le(a, b)
    }
}

/// A formula whose free variables are among `vars`. With `bounded`,
/// every quantifier is bounded by a small closed term.
pub fn formula(rng: &mut impl Rng, depth: u32, vars: &[Ident], bounded: bool) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return atom(rng, vars);
    }
    let d = depth - 1;
    match rng.gen_range(0..6) {
        0 => Formula::not(formula(rng, d, vars, bounded)),
        1 => Formula::and(formula(rng, d, vars, bounded), formula(rng, d, vars, bounded)),
        2 => Formula::or(formula(rng, d, vars, bounded), formula(rng, d, vars, bounded)),
        3 => Formula::implies(formula(rng, d, vars, bounded), formula(rng, d, vars, bounded)),
        _ => {
            let x = ident(VARS.choose(rng).unwrap());
            let mut inner = vars.to_vec();
            if !inner.contains(&x) {
                inner.push(x.clone());
            }
            let body = formula(rng, d, &inner, bounded);
            let bound = numeral(rng.gen_range(0..4));
            match (bounded || rng.gen_bool(0.5), rng.gen_bool(0.5)) {
                (true, true) => Formula::bounded_forall(&x, bound, body),
                (true, false) => Formula::bounded_exists(&x, bound, body),
                (false, true) => Formula::forall(&x, body),
                (false, false) => Formula::exists(&x, body),
            }
        }
    }
}

pub fn closed_delta0(rng: &mut impl Rng, depth: u32) -> Formula {
    formula(rng, depth, &[], true)
}

/// A closed bounded sentence that evaluates to true.
pub fn true_sentence(rng: &mut impl Rng, depth: u32) -> Formula {
    let f = closed_delta0(rng, depth);
    if eval_bounded(&f).unwrap() {
        f
    } else {
        Formula::not(f)
    }
}

fn random_rule(rng: &mut impl Rng, len: usize) -> Rule {
    let idx = |rng: &mut dyn rand::RngCore| rng.gen_range(0..=len + 1);
    match rng.gen_range(0..9) {
        0 => Rule::PaAxiom(rng.gen_range(0..10)),
        1 => Rule::Induction,
        2 => Rule::Equality,
        3 => {
            let id = rng.gen_range(0..17u8);
            let w = (id == 10).then(|| closed_term(rng, 2));
            Rule::Logical(LogicalScheme::from_id(id, w).unwrap())
        }
        4 => Rule::ModusPonens { minor: idx(rng), major: idx(rng) },
        5 => Rule::Generalization { premise: idx(rng) },
        6 => Rule::Instantiation { premise: idx(rng), term: term(rng, 2, &[ident("x")]) },
        7 => Rule::EvalTrue,
        _ => Rule::Premise,
    }
}

/// Arbitrary, usually invalid, proof.
pub fn junk_proof(rng: &mut impl Rng) -> Proof {
    let n = rng.gen_range(1..6);
    let vars: Vec<Ident> = VARS.iter().map(|v| ident(v)).collect();
    let steps = (0..n)
        .map(|_| ProofStep::new(formula(rng, 3, &vars[..2], false), random_rule(rng, n)))
        .collect();
    Proof::new(steps).unwrap()
}

struct Deriv {
    steps: Vec<ProofStep>,
}

impl Deriv {
    fn push(&mut self, f: Formula, r: Rule) -> usize {
        self.steps.push(ProofStep::new(f, r));
        self.steps.len()
    }

    fn get(&self, i: usize) -> &Formula {
        &self.steps[i - 1].conclusion
    }

    fn mp(&mut self, minor: usize, major: usize) -> usize {
        let Formula::Implies(_, b) = self.get(major).clone() else { panic!("not an implication") };
        self.push(*b, Rule::ModusPonens { minor, major })
    }
}

/// A valid proof from no premises whose last conclusion is a closed
/// bounded sentence.
pub fn derivation(rng: &mut impl Rng, moves: usize) -> Proof {
    let mut d = Deriv { steps: Vec::new() };
    let mut closed: Vec<usize> = Vec::new();
    let mut equations: Vec<usize> = Vec::new();
    for _ in 0..moves {
        let choice = if closed.is_empty() { 0 } else { rng.gen_range(0..8) };
        let new = match choice {
            0 => d.push(true_sentence(rng, 2), Rule::EvalTrue),
            1 => {
                // instantiate a universally quantified axiom with closed terms
                let which = *[0u8, 1, 2, 3, 4, 5].choose(rng).unwrap();
                let mut at = d.push(pa_axioms()[which as usize].clone(), Rule::PaAxiom(which));
                while let Formula::ForAll(x, body) = d.get(at).clone() {
                    let t = closed_term(rng, 1);
                    at = d.push(substitute(&body, &x, &t), Rule::Instantiation { premise: at, term: t });
                }
                at
            }
            2 => {
                let (a, b) = (*closed.choose(rng).unwrap(), *closed.choose(rng).unwrap());
                let (fa, fb) = (d.get(a).clone(), d.get(b).clone());
                let scheme = Formula::implies(
                    fa.clone(),
                    Formula::implies(fb.clone(), Formula::and(fa, fb)),
                );
                let s = d.push(scheme, Rule::Logical(LogicalScheme::AndIntro));
                let half = d.mp(a, s);
                d.mp(b, half)
            }
            3 => {
                let a = *closed.choose(rng).unwrap();
                let fa = d.get(a).clone();
                let other = closed_delta0(rng, 2);
                let (disj, scheme) = if rng.gen_bool(0.5) {
                    (Formula::or(fa.clone(), other), LogicalScheme::OrIntroLeft)
                } else {
                    (Formula::or(other, fa.clone()), LogicalScheme::OrIntroRight)
                };
                let s = d.push(Formula::implies(fa, disj), Rule::Logical(scheme));
                d.mp(a, s)
            }
            4 => {
                let a = *closed.choose(rng).unwrap();
                let fa = d.get(a).clone();
                let k = Formula::implies(fa.clone(), Formula::implies(closed_delta0(rng, 2), fa));
                let s = d.push(k, Rule::Logical(LogicalScheme::K));
                d.mp(a, s)
            }
            5 if !equations.is_empty() => {
                let e = *equations.choose(rng).unwrap();
                let Formula::Eq(l, r) = d.get(e).clone() else { unreachable!() };
                let (l, r) = (l.clone(), r.clone());
                let concl = match rng.gen_range(0..3) {
                    0 => Formula::eq(r.clone(), l.clone()),
                    1 => Formula::eq(Term::succ(l.clone()), Term::succ(r.clone())),
                    _ => {
                        let c = closed_term(rng, 1);
                        Formula::eq(Term::add(l.clone(), c.clone()), Term::add(r.clone(), c))
                    }
                };
                let s = d.push(Formula::implies(Formula::eq(l, r), concl), Rule::Equality);
                d.mp(e, s)
            }
            6 => {
                let a = *closed.choose(rng).unwrap();
                match d.get(a).clone() {
                    Formula::And(x, y) => {
                        let (part, scheme) = if rng.gen_bool(0.5) {
                            (*x.clone(), LogicalScheme::AndElimLeft)
                        } else {
                            (*y.clone(), LogicalScheme::AndElimRight)
                        };
                        let s = d.push(
                            Formula::implies(Formula::and(*x, *y), part),
                            Rule::Logical(scheme),
                        );
                        d.mp(a, s)
                    }
                    _ => d.push(true_sentence(rng, 1), Rule::EvalTrue),
                }
            }
            _ => {
                let t = closed_term(rng, 2);
                d.push(Formula::eq(t.clone(), t), Rule::Equality)
            }
        };
        let f = d.get(new);
        if f.is_sentence() && f.is_delta0() {
            closed.push(new);
            if matches!(f, Formula::Eq(..)) {
                equations.push(new);
            }
        }
    }
    let last = *closed.last().unwrap();
    d.steps.truncate(last);
    Proof::new(d.steps).unwrap()
}

/// A small random change to a proof.
pub fn mutate(rng: &mut impl Rng, p: &Proof) -> Proof {
    let mut steps = p.steps().to_vec();
    let i = rng.gen_range(0..steps.len());
    match rng.gen_range(0..4) {
        0 => steps[i].conclusion = closed_delta0(rng, 2),
        1 => steps[i].rule = random_rule(rng, steps.len()),
        2 => {
            let j = rng.gen_range(0..steps.len());
            steps.swap(i, j);
        }
        _ => steps.truncate(i.max(1)),
    }
    Proof::new(steps).unwrap()
}
