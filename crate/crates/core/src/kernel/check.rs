use crate::logic::{eval_bounded, substitute, EvalError, Formula};

use super::axioms::{is_equality_axiom, is_induction_instance, matches_scheme, pa_axioms};
use super::{Proof, ProofStep, RejectReason, Rejection, Rule};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accepted,
    Rejected(Rejection),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }
}

/// Checks one step against the conclusions of the steps before it.
///
/// `number` is the step's 1-based position; `earlier[i]` is the
/// conclusion of step `i + 1`.
pub fn check_step(
    gamma: &[Formula],
    earlier: &[&Formula],
    number: usize,
    step: &ProofStep,
) -> Result<(), Rejection> {
    let reject = |reason, detail: String| Err(Rejection::new(number, reason, detail));
    for p in step.rule.premises() {
        if p == 0 || p >= number || p > earlier.len() {
            return reject(RejectReason::BadPremiseIndex, format!("cites step {p}"));
        }
    }
    let cited = |p: usize| earlier[p - 1];
    let concl = &step.conclusion;
    let mismatch = |what: &str| Err(Rejection::new(number, RejectReason::RuleMismatch, what));
    match &step.rule {
        Rule::PaAxiom(i) => match pa_axioms().get(*i as usize) {
            Some(ax) if ax == concl => Ok(()),
            Some(_) => mismatch("not the cited Peano axiom"),
            None => mismatch("no such Peano axiom"),
        },
        Rule::Induction => {
            if is_induction_instance(concl) {
                Ok(())
            } else {
                mismatch("not an induction instance")
            }
        }
        Rule::Equality => {
            if is_equality_axiom(concl) {
                Ok(())
            } else {
                mismatch("not an equality axiom")
            }
        }
        Rule::Logical(scheme) => {
            if matches_scheme(scheme, concl) {
                Ok(())
            } else {
                Err(Rejection::new(
                    number,
                    RejectReason::RuleMismatch,
                    format!("not an instance of {}", scheme.name()),
                ))
            }
        }
        Rule::ModusPonens { minor, major } => match cited(*major) {
            Formula::Implies(a, b) if **a == *cited(*minor) && **b == *concl => Ok(()),
            _ => mismatch("modus ponens does not apply"),
        },
        Rule::Generalization { premise } => match concl {
            Formula::ForAll(x, body) if **body == *cited(*premise) => {
                match gamma.iter().find(|g| g.is_free(x)) {
                    Some(g) => reject(
                        RejectReason::RuleMismatch,
                        format!("`{x}` is free in premise {g}"),
                    ),
                    None => Ok(()),
                }
            }
            _ => mismatch("generalization does not apply"),
        },
        Rule::Instantiation { premise, term } => match cited(*premise) {
            Formula::ForAll(x, body) if substitute(body, x, term) == *concl => Ok(()),
            _ => mismatch("instantiation does not apply"),
        },
        Rule::EvalTrue => match eval_bounded(concl) {
            Ok(true) => Ok(()),
            Ok(false) => reject(RejectReason::EvalFalse, String::new()),
            Err(e @ (EvalError::NotBounded | EvalError::FreeVariable(_) | EvalError::Overflow)) => {
                reject(RejectReason::RuleMismatch, e.to_string())
            }
        },
        Rule::Premise => {
            if gamma.contains(concl) {
                Ok(())
            } else {
                reject(RejectReason::NotInGamma, String::new())
            }
        }
    }
}

/// Accepts iff every step is locally valid, every premise step is in
/// `gamma`, and the last conclusion is `target`.
pub fn check_proof(gamma: &[Formula], proof: &Proof, target: &Formula) -> Verdict {
    let mut earlier: Vec<&Formula> = Vec::with_capacity(proof.steps().len());
    for (i, step) in proof.steps().iter().enumerate() {
        if let Err(r) = check_step(gamma, &earlier, i + 1, step) {
            return Verdict::Rejected(r);
        }
        earlier.push(&step.conclusion);
    }
    if proof.target() == target {
        Verdict::Accepted
    } else {
        Verdict::Rejected(Rejection::new(
            proof.steps().len(),
            RejectReason::TargetMismatch,
            "the last step does not conclude the target",
        ))
    }
}
