use crate::arithmetize::{
    halting_witness_proof, halts_no_formula, halts_yes_formula, loops_formula, DEFAULT_HORIZON,
};
use crate::kernel::{serialize_proof, Alphabet};
use crate::machines::{run, MachineDesc, Outcome, RunOutcome};
use crate::omega::{
    build_loops_certificate, serialize_omega_proof, OmegaProof, OmegaProofStep,
    DEFAULT_INSTANCE_BUDGET, DEFAULT_K,
};

use super::{Advance, CandidateSource, Dovetailer, Found, KernelOracle, SearchBudget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Every thread enumerates all byte strings.
    Pure,
    /// Each thread tries the single candidate built from a simulation.
    Witness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HConfig {
    /// Limits for each of the three threads.
    pub budget: SearchBudget,
    pub k: u64,
    pub instance_budget: u64,
    pub mode: Mode,
}

impl Default for HConfig {
    fn default() -> Self {
        HConfig {
            budget: SearchBudget::default(),
            k: DEFAULT_K,
            instance_budget: DEFAULT_INSTANCE_BUDGET,
            mode: Mode::Witness,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ThreadProgress {
    pub candidates_opened: u64,
    pub oracle_steps: u64,
    pub rounds_completed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HProgress {
    pub threads: Vec<ThreadProgress>,
}

/// The winning thread (0-based) and its proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreadReport {
    pub thread: usize,
    pub found: Found,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HOutcome {
    HaltsYes(Found),
    HaltsNo(Found),
    /// Accepted with every ω-step checked on instances `0..=k`.
    Loops { found: Found, k: u64 },
    BudgetExhausted(HProgress),
}

impl HOutcome {
    /// 1, 2 or 3 for the thread that found a proof.
    pub fn thread(&self) -> Option<usize> {
        match self {
            HOutcome::HaltsYes(_) => Some(1),
            HOutcome::HaltsNo(_) => Some(2),
            HOutcome::Loops { .. } => Some(3),
            HOutcome::BudgetExhausted(_) => None,
        }
    }

    pub fn found(&self) -> Option<&Found> {
        match self {
            HOutcome::HaltsYes(f) | HOutcome::HaltsNo(f) | HOutcome::Loops { found: f, .. } => Some(f),
            HOutcome::BudgetExhausted(_) => None,
        }
    }
}

fn progress(d: &Dovetailer<'_>) -> ThreadProgress {
    ThreadProgress {
        candidates_opened: d.candidates_opened(),
        oracle_steps: d.oracle_steps(),
        rounds_completed: d.rounds_completed(),
    }
}

/// Round-robin over `threads`, one oracle step each per turn, skipping
/// threads whose search has ended. `observe` sees the per-thread step
/// counts after every step. Returns the first find, if any, and the
/// final progress of every thread.
pub fn run_threads(
    threads: &mut [Dovetailer<'_>],
    mut observe: impl FnMut(&[u64]),
) -> (Option<ThreadReport>, Vec<ThreadProgress>) {
    let mut counts = vec![0u64; threads.len()];
    loop {
        let mut any = false;
        for (i, d) in threads.iter_mut().enumerate() {
            if d.is_done() {
                continue;
            }
            any = true;
            let a = d.advance_one();
            counts[i] = d.oracle_steps();
            observe(&counts);
            if let Advance::Found(found) = a {
                let report = ThreadReport { thread: i, found };
                return (Some(report), threads.iter().map(progress).collect());
            }
        }
        if !any {
            return (None, threads.iter().map(progress).collect());
        }
    }
}

fn witness_candidate(m: &MachineDesc, n: u64, outcome: Outcome) -> Vec<u8> {
    let s = match run(m, n, DEFAULT_HORIZON) {
        RunOutcome::Yes(s) | RunOutcome::No(s) => s,
        RunOutcome::Timeout => DEFAULT_HORIZON,
    };
    let p = halting_witness_proof(m, n, outcome, DEFAULT_HORIZON, s).expect("default horizon fits");
    serialize_proof(&p)
}

fn loops_candidate(m: &MachineDesc, n: u64) -> Vec<u8> {
    let p = OmegaProof::new(vec![OmegaProofStep::Omega(build_loops_certificate(m, n))])
        .expect("non-empty");
    serialize_omega_proof(&p).expect("certificate has a program")
}

/// Searches for proofs of "m halts on n with yes", "... with no" and
/// "m loops on n" in three fair threads against the ω-capable checker.
pub fn run_h(m: &MachineDesc, n: u64, cfg: &HConfig) -> HOutcome {
    let oracle = KernelOracle::with_omega(cfg.k, cfg.instance_budget);
    let targets = [halts_yes_formula(m, n), halts_no_formula(m, n), loops_formula(m, n)];
    let sources = match cfg.mode {
        Mode::Pure => std::array::from_fn(|_| CandidateSource::Shortlex(Alphabet::full())),
        Mode::Witness => [
            CandidateSource::List(vec![witness_candidate(m, n, Outcome::Yes)]),
            CandidateSource::List(vec![witness_candidate(m, n, Outcome::No)]),
            CandidateSource::List(vec![loops_candidate(m, n)]),
        ],
    };
    let mut threads: Vec<Dovetailer<'_>> = targets
        .into_iter()
        .zip(sources)
        .map(|(q, src)| Dovetailer::new(q, &oracle, src, cfg.budget))
        .collect();
    match run_threads(&mut threads, |_| {}) {
        (Some(ThreadReport { thread: 0, found }), _) => HOutcome::HaltsYes(found),
        (Some(ThreadReport { thread: 1, found }), _) => HOutcome::HaltsNo(found),
        (Some(ThreadReport { found, .. }), _) => HOutcome::Loops { found, k: cfg.k },
        (None, threads) => HOutcome::BudgetExhausted(HProgress { threads }),
    }
}
