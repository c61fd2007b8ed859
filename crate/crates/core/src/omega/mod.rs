//! The restricted ω-rule.
//!
//! An ω-step concludes `forall x. phi` from a premise machine that, given
//! `n`, produces a proof of `phi(n)`. Checking such a step completely
//! would mean running the premise on every numeral, so every check here
//! is bounded: instances `0..=k` are verified, each within a metered
//! budget, and acceptance is always reported together with `k`.

mod codec;
mod text;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::arithmetize::{loops_formula_with_horizon, loops_instance, EncodingOverflow, DEFAULT_HORIZON};
use crate::kernel::{
    check_proof, check_step, deserialize_proof, serialize_proof, Proof, ProofStep, RejectReason,
    Rejection, Rule, Verdict,
};
use crate::logic::{numeral, substitute, Formula, Ident};
use crate::machines::{initial_config, step, MachineDesc, Step};

pub use codec::{deserialize_omega_proof, serialize_omega_proof, NotSerializable, OMEGA_TAG};
pub use text::{parse_omega_proof_text, print_omega_proof_text};

/// Instances checked when no bound is given.
pub const DEFAULT_K: u64 = 50;
/// Metered operations allowed per instance when no budget is given.
pub const DEFAULT_INSTANCE_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("budget exhausted")]
pub struct Exhausted;

/// Counts the work done by a premise machine.
#[derive(Clone, Debug)]
pub struct Meter {
    remaining: u64,
    used: u64,
}

impl Meter {
    pub fn new(budget: u64) -> Self {
        Meter { remaining: budget, used: 0 }
    }

    pub fn charge(&mut self, units: u64) -> Result<(), Exhausted> {
        if units > self.remaining {
            self.used += self.remaining;
            self.remaining = 0;
            return Err(Exhausted);
        }
        self.remaining -= units;
        self.used += units;
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// An executable premise: numeral in, serialized proof out.
pub trait PremiseMachine: fmt::Debug + Send + Sync {
    fn produce(&self, n: u64, meter: &mut Meter) -> Result<Vec<u8>, Exhausted>;

    /// A serializable description of this machine, if there is one.
    fn program(&self) -> Option<&PremiseProgram> {
        None
    }
}

/// Premise machines with a binary and text representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PremiseProgram {
    /// Given `t`, runs `machine` on `input` for `t` steps and emits a
    /// one-step evaluation proof that it has not halted by time `t`.
    LoopsCertificate { machine: MachineDesc, input: u64, horizon: u64 },
}

impl PremiseMachine for PremiseProgram {
    fn produce(&self, t: u64, meter: &mut Meter) -> Result<Vec<u8>, Exhausted> {
        match self {
            PremiseProgram::LoopsCertificate { machine, input, horizon } => {
                let mut c = initial_config(machine, *input);
                for _ in 0..t {
                    meter.charge(1)?;
                    match step(machine, &c) {
                        Ok(Step::Next(next)) => c = next,
                        Ok(Step::Halted(_)) | Err(_) => break,
                    }
                }
                let instance = loops_instance(machine, *input, *horizon, t)
                    .expect("horizon validated when the program was built");
                let proof = Proof::new(vec![ProofStep::new(instance, Rule::EvalTrue)])
                    .expect("non-empty");
                let bytes = serialize_proof(&proof);
                meter.charge(bytes.len() as u64)?;
                Ok(bytes)
            }
        }
    }

    fn program(&self) -> Option<&PremiseProgram> {
        Some(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OmegaStepError {
    #[error("conclusion must be a universal formula")]
    NotUniversal,
    #[error("`{0}` is free in the conclusion")]
    FreeVariable(Ident),
}

/// One application of the ω-rule: `forall var. phi` from a premise
/// machine producing proofs of `phi(n)` under `gamma`.
#[derive(Clone, Debug)]
pub struct OmegaStep {
    gamma: Vec<Formula>,
    var: Ident,
    phi: Formula,
    premise: Arc<dyn PremiseMachine>,
    conclusion: Formula,
}

impl OmegaStep {
    pub fn new(
        gamma: Vec<Formula>,
        premise: Arc<dyn PremiseMachine>,
        conclusion: Formula,
    ) -> Result<Self, OmegaStepError> {
        let Formula::ForAll(var, phi) = &conclusion else {
            return Err(OmegaStepError::NotUniversal);
        };
        if let Some(x) = conclusion.free_vars().into_iter().next() {
            return Err(OmegaStepError::FreeVariable(x));
        }
        let (var, phi) = (var.clone(), (**phi).clone());
        Ok(OmegaStep { gamma, var, phi, premise, conclusion })
    }

    pub fn gamma(&self) -> &[Formula] {
        &self.gamma
    }

    pub fn var(&self) -> &Ident {
        &self.var
    }

    pub fn phi(&self) -> &Formula {
        &self.phi
    }

    pub fn premise(&self) -> &Arc<dyn PremiseMachine> {
        &self.premise
    }

    pub fn conclusion(&self) -> &Formula {
        &self.conclusion
    }

    /// `phi` with the bound variable replaced by the numeral `n`.
    pub fn instance(&self, n: u64) -> Formula {
        substitute(&self.phi, &self.var, &numeral(n))
    }
}

impl PartialEq for OmegaStep {
    fn eq(&self, other: &Self) -> bool {
        let same_premise = match (self.premise.program(), other.premise.program()) {
            (Some(a), Some(b)) => a == b,
            _ => Arc::ptr_eq(&self.premise, &other.premise),
        };
        same_premise && self.gamma == other.gamma && self.conclusion == other.conclusion
    }
}

/// Result of checking an ω-step on a prefix of instances. There is no
/// unconditional acceptance: the best outcome names the bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaVerdict {
    AcceptedUpTo(u64),
    Rejected { instance: u64, reason: RejectReason, detail: String },
    BudgetExhausted { instance: u64 },
}

/// Outcome of checking a single instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceCheck {
    Valid,
    Invalid { reason: RejectReason, detail: String },
    Exhausted,
}

/// Runs the premise on `n` and checks the proof it emits against
/// `phi(n)`.
pub fn check_omega_instance(s: &OmegaStep, n: u64, per_instance_budget: u64) -> InstanceCheck {
    let mut meter = Meter::new(per_instance_budget);
    let bytes = match s.premise.produce(n, &mut meter) {
        Ok(b) => b,
        Err(Exhausted) => return InstanceCheck::Exhausted,
    };
    let proof = match deserialize_proof(&bytes) {
        Ok(p) => p,
        Err(e) => {
            return InstanceCheck::Invalid {
                reason: RejectReason::MalformedEncoding,
                detail: e.to_string(),
            }
        }
    };
    match check_proof(&s.gamma, &proof, &s.instance(n)) {
        Verdict::Accepted => InstanceCheck::Valid,
        Verdict::Rejected(r) => InstanceCheck::Invalid { reason: r.reason, detail: r.to_string() },
    }
}

/// Checks instances `0..=k` in order and reports the first failure.
pub fn check_omega_bounded(s: &OmegaStep, k: u64, per_instance_budget: u64) -> OmegaVerdict {
    for n in 0..=k {
        match check_omega_instance(s, n, per_instance_budget) {
            InstanceCheck::Valid => {}
            InstanceCheck::Invalid { reason, detail } => {
                return OmegaVerdict::Rejected { instance: n, reason, detail }
            }
            InstanceCheck::Exhausted => return OmegaVerdict::BudgetExhausted { instance: n },
        }
    }
    OmegaVerdict::AcceptedUpTo(k)
}

/// The ω-step concluding [`loops_formula`](crate::arithmetize::loops_formula)
/// for `(m, n)` from the loops-certificate premise.
pub fn build_loops_certificate(m: &MachineDesc, n: u64) -> OmegaStep {
    build_loops_certificate_with_horizon(m, n, DEFAULT_HORIZON).expect("default horizon fits")
}

pub fn build_loops_certificate_with_horizon(
    m: &MachineDesc,
    n: u64,
    horizon: u64,
) -> Result<OmegaStep, EncodingOverflow> {
    let conclusion = loops_formula_with_horizon(m, n, horizon)?;
    let program = PremiseProgram::LoopsCertificate { machine: m.clone(), input: n, horizon };
    Ok(OmegaStep::new(Vec::new(), Arc::new(program), conclusion).expect("closed universal sentence"))
}

#[derive(Clone, Debug, PartialEq)]
pub enum OmegaProofStep {
    Finitary(ProofStep),
    Omega(OmegaStep),
}

impl OmegaProofStep {
    pub fn conclusion(&self) -> &Formula {
        match self {
            OmegaProofStep::Finitary(s) => &s.conclusion,
            OmegaProofStep::Omega(s) => s.conclusion(),
        }
    }
}

/// A proof that may use the ω-rule; finitary steps may cite the
/// conclusions of earlier ω-steps.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaProof {
    steps: Vec<OmegaProofStep>,
}

impl OmegaProof {
    pub fn new(steps: Vec<OmegaProofStep>) -> Option<Self> {
        (!steps.is_empty()).then_some(OmegaProof { steps })
    }

    pub fn steps(&self) -> &[OmegaProofStep] {
        &self.steps
    }

    pub fn target(&self) -> &Formula {
        self.steps[self.steps.len() - 1].conclusion()
    }

    /// The same proof without ω-steps, if it has none.
    pub fn to_finitary(&self) -> Option<Proof> {
        let steps = self
            .steps
            .iter()
            .map(|s| match s {
                OmegaProofStep::Finitary(step) => Some(step.clone()),
                OmegaProofStep::Omega(_) => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Proof::new(steps).ok()
    }

    pub fn has_omega_step(&self) -> bool {
        self.steps.iter().any(|s| matches!(s, OmegaProofStep::Omega(_)))
    }
}

impl From<Proof> for OmegaProof {
    fn from(p: Proof) -> Self {
        OmegaProof { steps: p.into_steps().into_iter().map(OmegaProofStep::Finitary).collect() }
    }
}

/// Verdict on a whole ω-proof. Acceptance is conditional on the bound
/// `k` used for every ω-step, even when the proof contains none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaProofVerdict {
    AcceptedConditional { k: u64 },
    Rejected(Rejection),
    BudgetExhausted { step: usize, instance: u64 },
}

impl OmegaProofVerdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, OmegaProofVerdict::AcceptedConditional { .. })
    }
}

/// Checks an ω-step as step `number` of a proof under `gamma`.
pub fn check_omega_step(
    gamma: &[Formula],
    number: usize,
    s: &OmegaStep,
    k: u64,
    per_instance_budget: u64,
) -> Result<(), OmegaProofVerdict> {
    if let Some(g) = s.gamma.iter().find(|g| !gamma.contains(g)) {
        return Err(OmegaProofVerdict::Rejected(Rejection::new(
            number,
            RejectReason::NotInGamma,
            format!("ω-step assumes {g}"),
        )));
    }
    match check_omega_bounded(s, k, per_instance_budget) {
        OmegaVerdict::AcceptedUpTo(_) => Ok(()),
        OmegaVerdict::Rejected { instance, reason, detail } => Err(OmegaProofVerdict::Rejected(
            Rejection::new(number, reason, format!("instance {instance}: {detail}")),
        )),
        OmegaVerdict::BudgetExhausted { instance } => {
            Err(OmegaProofVerdict::BudgetExhausted { step: number, instance })
        }
    }
}

pub fn check_omega_proof(
    gamma: &[Formula],
    p: &OmegaProof,
    q: &Formula,
    k: u64,
    per_instance_budget: u64,
) -> OmegaProofVerdict {
    let mut earlier: Vec<&Formula> = Vec::with_capacity(p.steps.len());
    for (i, s) in p.steps.iter().enumerate() {
        let number = i + 1;
        match s {
            OmegaProofStep::Finitary(step) => {
                if let Err(r) = check_step(gamma, &earlier, number, step) {
                    return OmegaProofVerdict::Rejected(r);
                }
            }
            OmegaProofStep::Omega(step) => {
                if let Err(v) = check_omega_step(gamma, number, step, k, per_instance_budget) {
                    return v;
                }
            }
        }
        earlier.push(s.conclusion());
    }
    if p.target() == q {
        OmegaProofVerdict::AcceptedConditional { k }
    } else {
        OmegaProofVerdict::Rejected(Rejection::new(
            p.steps.len(),
            RejectReason::TargetMismatch,
            String::new(),
        ))
    }
}

#[cfg(test)]
mod tests;
