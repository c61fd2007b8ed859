use crate::kernel::{check_step, deserialize_proof};
use crate::logic::Formula;
use crate::omega::{
    check_omega_instance, deserialize_omega_proof, InstanceCheck, OmegaProof, OmegaProofStep,
    DEFAULT_INSTANCE_BUDGET, DEFAULT_K,
};

/// Observable state of a verifier run. `Yes` and `No` are final.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OracleState {
    Running,
    Yes,
    No,
}

/// A verifier that can be advanced one step at a time.
pub trait VerifierOracle {
    fn start(&self, candidate: &[u8], q: &Formula) -> Box<dyn OracleRun + '_>;
}

pub trait OracleRun {
    fn step(&mut self) -> OracleState;
}

/// The proof checker as a stepwise oracle: one step decodes the
/// candidate, then each finitary step costs one oracle step, each
/// instance of an ω-step costs one, and a final step compares the
/// target.
#[derive(Clone, Debug)]
pub struct KernelOracle {
    pub gamma: Vec<Formula>,
    /// Accept ω-steps, checked on instances `0..=k`.
    pub allow_omega: bool,
    pub k: u64,
    pub instance_budget: u64,
}

impl KernelOracle {
    /// Finitary proofs only.
    pub fn finitary() -> Self {
        KernelOracle { gamma: Vec::new(), allow_omega: false, k: DEFAULT_K, instance_budget: DEFAULT_INSTANCE_BUDGET }
    }

    pub fn with_omega(k: u64, instance_budget: u64) -> Self {
        KernelOracle { gamma: Vec::new(), allow_omega: true, k, instance_budget }
    }
}

enum Phase {
    Decode(Vec<u8>),
    Steps { proof: OmegaProof, next: usize, instance: u64 },
    Done(OracleState),
}

struct KernelRun<'a> {
    oracle: &'a KernelOracle,
    q: Formula,
    phase: Phase,
}

impl VerifierOracle for KernelOracle {
    fn start(&self, candidate: &[u8], q: &Formula) -> Box<dyn OracleRun + '_> {
        Box::new(KernelRun { oracle: self, q: q.clone(), phase: Phase::Decode(candidate.to_vec()) })
    }
}

impl KernelRun<'_> {
    fn advance(&mut self) -> OracleState {
        let o = self.oracle;
        match &mut self.phase {
            Phase::Done(s) => *s,
            Phase::Decode(bytes) => {
                let decoded = if o.allow_omega {
                    deserialize_omega_proof(bytes).ok()
                } else {
                    deserialize_proof(bytes).ok().map(OmegaProof::from)
                };
                match decoded {
                    Some(proof) => {
                        self.phase = Phase::Steps { proof, next: 0, instance: 0 };
                        OracleState::Running
                    }
                    None => OracleState::No,
                }
            }
            Phase::Steps { proof, next, instance } => {
                let Some(step) = proof.steps().get(*next) else {
                    return if proof.target() == &self.q { OracleState::Yes } else { OracleState::No };
                };
                match step {
                    OmegaProofStep::Finitary(s) => {
                        let earlier: Vec<&Formula> =
                            proof.steps()[..*next].iter().map(|s| s.conclusion()).collect();
                        if check_step(&o.gamma, &earlier, *next + 1, s).is_err() {
                            return OracleState::No;
                        }
                        *next += 1;
                    }
                    OmegaProofStep::Omega(s) => {
                        if s.gamma().iter().any(|g| !o.gamma.contains(g)) {
                            return OracleState::No;
                        }
                        if check_omega_instance(s, *instance, o.instance_budget) != InstanceCheck::Valid {
                            return OracleState::No;
                        }
                        *instance += 1;
                        if *instance > o.k {
                            *instance = 0;
                            *next += 1;
                        }
                    }
                }
                OracleState::Running
            }
        }
    }
}

impl OracleRun for KernelRun<'_> {
    fn step(&mut self) -> OracleState {
        let s = self.advance();
        if s != OracleState::Running {
            self.phase = Phase::Done(s);
        }
        s
    }
}
