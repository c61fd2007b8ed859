//! Binary form of ω-proofs. It extends the finitary proof format with
//! one more rule tag:
//!
//! ```text
//! step     9 program u16 gamma-count formula* conclusion
//! program  0 machine u64 input u64 horizon      (loops certificate)
//! ```
//!
//! A finitary proof's encoding is therefore also a valid ω-proof.

use std::sync::Arc;

use thiserror::Error;

use crate::arithmetize::MAX_HORIZON;
use crate::kernel::codec::{decode_step_after_tag, encode_formula, encode_step, read_formula};
use crate::machines::MachineDesc;
use crate::wire::{self, DecodeError, Reader};

use super::{OmegaProof, OmegaProofStep, OmegaStep, PremiseProgram};

pub const OMEGA_TAG: u8 = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("step {step}: premise machine has no serializable program")]
pub struct NotSerializable {
    pub step: usize,
}

fn encode_program(out: &mut Vec<u8>, p: &PremiseProgram) {
    match p {
        PremiseProgram::LoopsCertificate { machine, input, horizon } => {
            out.push(0);
            machine.encode(out);
            wire::put_u64(out, *input);
            wire::put_u64(out, *horizon);
        }
    }
}

fn decode_program(r: &mut Reader<'_>) -> Result<PremiseProgram, DecodeError> {
    match r.u8()? {
        0 => {
            let machine = MachineDesc::decode(r)?;
            let input = r.u64()?;
            let horizon = r.u64()?;
            if horizon > MAX_HORIZON {
                return Err(r.error(format!("horizon {horizon} exceeds {MAX_HORIZON}")));
            }
            Ok(PremiseProgram::LoopsCertificate { machine, input, horizon })
        }
        kind => Err(r.error(format!("unknown premise program {kind}"))),
    }
}

pub fn serialize_omega_proof(p: &OmegaProof) -> Result<Vec<u8>, NotSerializable> {
    let mut out = Vec::new();
    wire::put_u16(&mut out, u16::try_from(p.steps().len()).expect("step count exceeds u16"));
    for (i, s) in p.steps().iter().enumerate() {
        match s {
            OmegaProofStep::Finitary(step) => encode_step(&mut out, step),
            OmegaProofStep::Omega(step) => {
                let program = step.premise().program().ok_or(NotSerializable { step: i + 1 })?;
                out.push(OMEGA_TAG);
                encode_program(&mut out, program);
                wire::put_u16(&mut out, step.gamma().len() as u16);
                for g in step.gamma() {
                    encode_formula(&mut out, g);
                }
                encode_formula(&mut out, step.conclusion());
            }
        }
    }
    Ok(out)
}

pub fn deserialize_omega_proof(bytes: &[u8]) -> Result<OmegaProof, DecodeError> {
    let mut r = Reader::new(bytes);
    let count = r.u16()?;
    if count == 0 {
        return Err(r.error("proof has no steps"));
    }
    let mut steps = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let tag = r.u8()?;
        if tag != OMEGA_TAG {
            steps.push(OmegaProofStep::Finitary(decode_step_after_tag(&mut r, tag)?));
            continue;
        }
        let program = decode_program(&mut r)?;
        let n = r.u16()?;
        let gamma = (0..n).map(|_| read_formula(&mut r, 0)).collect::<Result<Vec<_>, _>>()?;
        let conclusion = read_formula(&mut r, 0)?;
        let step = OmegaStep::new(gamma, Arc::new(program), conclusion)
            .map_err(|e| r.error(e.to_string()))?;
        steps.push(OmegaProofStep::Omega(step));
    }
    r.finish()?;
    Ok(OmegaProof::new(steps).expect("non-empty"))
}
