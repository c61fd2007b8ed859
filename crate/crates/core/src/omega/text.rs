//! Text form of ω-proofs: the finitary line format plus
//!
//! ```text
//! k. <conclusion> BY OMEGA loops <machine> <input> <horizon>
//! ```
//!
//! where `<machine>` is resolved by a caller-supplied function, usually
//! to a corpus name or a file path.

use std::fmt::Write;
use std::sync::Arc;

use crate::kernel::text::{parse_rule, raw_lines, rule_text, text_error};
use crate::kernel::{ProofStep, ProofTextError};
use crate::machines::MachineDesc;

use super::{OmegaProof, OmegaProofStep, OmegaStep, PremiseProgram};
use crate::arithmetize::MAX_HORIZON;

pub fn parse_omega_proof_text(
    text: &str,
    resolve: impl Fn(&str) -> Option<MachineDesc>,
) -> Result<OmegaProof, ProofTextError> {
    let mut steps = Vec::new();
    for raw in raw_lines(text)? {
        let Some(args) = raw.rule.strip_prefix("OMEGA ") else {
            let rule = parse_rule(raw.line, raw.rule)?;
            steps.push(OmegaProofStep::Finitary(ProofStep::new(raw.conclusion, rule)));
            continue;
        };
        let words: Vec<&str> = args.split_whitespace().collect();
        let [kind, name, input, horizon] = words[..] else {
            return Err(text_error(raw.line, "expected `OMEGA loops <machine> <input> <horizon>`"));
        };
        if kind != "loops" {
            return Err(text_error(raw.line, format!("unknown premise program `{kind}`")));
        }
        let machine = resolve(name)
            .ok_or_else(|| text_error(raw.line, format!("unknown machine `{name}`")))?;
        let number = |s: &str| {
            s.parse::<u64>().map_err(|_| text_error(raw.line, format!("bad number `{s}`")))
        };
        let (input, horizon) = (number(input)?, number(horizon)?);
        if horizon > MAX_HORIZON {
            return Err(text_error(raw.line, format!("horizon exceeds {MAX_HORIZON}")));
        }
        let program = PremiseProgram::LoopsCertificate { machine, input, horizon };
        let step = OmegaStep::new(Vec::new(), Arc::new(program), raw.conclusion)
            .map_err(|e| text_error(raw.line, e.to_string()))?;
        steps.push(OmegaProofStep::Omega(step));
    }
    Ok(OmegaProof::new(steps).expect("raw_lines rejects empty proofs"))
}

/// Prints `p`, naming machines with `name`; `None` if some ω-step has
/// a gamma, no program, or an unnamed machine.
pub fn print_omega_proof_text(
    p: &OmegaProof,
    name: impl Fn(&MachineDesc) -> Option<String>,
) -> Option<String> {
    let mut out = String::new();
    for (i, s) in p.steps().iter().enumerate() {
        let rule = match s {
            OmegaProofStep::Finitary(step) => rule_text(&step.rule),
            OmegaProofStep::Omega(step) => {
                if !step.gamma().is_empty() {
                    return None;
                }
                match step.premise().program()? {
                    PremiseProgram::LoopsCertificate { machine, input, horizon } => {
                        format!("OMEGA loops {} {input} {horizon}", name(machine)?)
                    }
                }
            }
        };
        let _ = writeln!(out, "{}. {} BY {}", i + 1, s.conclusion(), rule);
    }
    Some(out)
}
