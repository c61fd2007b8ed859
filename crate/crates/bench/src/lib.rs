//! Inputs shared by the benchmarks.

use peano_omega::arithmetize::{halting_witness_proof, halts_yes_formula, DEFAULT_HORIZON};
use peano_omega::kernel::Proof;
use peano_omega::logic::Formula;
use peano_omega::machines::{corpus_machine, MachineDesc, Outcome};

pub fn machine(name: &str) -> MachineDesc {
    corpus_machine(name).expect("corpus machine")
}

/// The three-step proof that BUSY3 halts with yes on input 0, and its target.
pub fn busy3_witness() -> (Proof, Formula) {
    let m = machine("BUSY3");
    let p = halting_witness_proof(&m, 0, Outcome::Yes, DEFAULT_HORIZON, 15).expect("fits");
    (p, halts_yes_formula(&m, 0))
}
