use super::*;
use crate::arithmetize::loops_formula;
use crate::kernel::{parse_proof_text, serialize_proof};
use crate::machines::{corpus_machine, run, RunOutcome};

fn machine(name: &str) -> MachineDesc {
    corpus_machine(name).unwrap()
}

/// Proves `0 = 0` for every instance except `bad`, where it emits junk.
#[derive(Debug)]
struct Garbage {
    bad: u64,
}

impl PremiseMachine for Garbage {
    fn produce(&self, n: u64, meter: &mut Meter) -> Result<Vec<u8>, Exhausted> {
        meter.charge(1)?;
        if n == self.bad {
            return Ok(vec![0xff, 0x00, 0x13]);
        }
        let p = parse_proof_text("1. 0 = 0 BY EVAL").unwrap();
        Ok(serialize_proof(&p))
    }
}

/// Runs forever on `stuck`.
#[derive(Debug)]
struct Diverges {
    stuck: u64,
}

impl PremiseMachine for Diverges {
    fn produce(&self, n: u64, meter: &mut Meter) -> Result<Vec<u8>, Exhausted> {
        if n == self.stuck {
            loop {
                meter.charge(1)?;
            }
        }
        Garbage { bad: u64::MAX }.produce(n, meter)
    }
}

fn trivial_step(premise: Arc<dyn PremiseMachine>) -> OmegaStep {
    let conclusion = crate::logic::parse_formula("forall x. 0 = 0").unwrap();
    OmegaStep::new(Vec::new(), premise, conclusion).unwrap()
}

#[test]
fn loops_certificate_accepted_for_looping_machine() {
    let s = build_loops_certificate(&machine("LOOP"), 0);
    assert_eq!(s.conclusion(), &loops_formula(&machine("LOOP"), 0));
    assert_eq!(check_omega_bounded(&s, 10, DEFAULT_INSTANCE_BUDGET), OmegaVerdict::AcceptedUpTo(10));
    assert_eq!(run(&machine("LOOP"), 0, 10), RunOutcome::Timeout);
}

#[test]
fn loops_certificate_rejected_for_halting_machine() {
    let s = build_loops_certificate(&machine("ALWAYS_YES"), 0);
    match check_omega_bounded(&s, 5, DEFAULT_INSTANCE_BUDGET) {
        OmegaVerdict::Rejected { instance, reason, .. } => {
            assert_eq!((instance, reason), (1, RejectReason::EvalFalse))
        }
        v => panic!("{v:?}"),
    }
}

#[test]
fn garbage_and_divergent_premises() {
    match check_omega_bounded(&trivial_step(Arc::new(Garbage { bad: 4 })), 10, 1000) {
        OmegaVerdict::Rejected { instance, reason, .. } => {
            assert_eq!((instance, reason), (4, RejectReason::MalformedEncoding))
        }
        v => panic!("{v:?}"),
    }
    assert_eq!(
        check_omega_bounded(&trivial_step(Arc::new(Diverges { stuck: 2 })), 10, 1000),
        OmegaVerdict::BudgetExhausted { instance: 2 }
    );
}

#[test]
fn conclusion_must_be_closed_universal() {
    let p: Arc<dyn PremiseMachine> = Arc::new(Garbage { bad: 0 });
    let f = crate::logic::parse_formula;
    assert_eq!(
        OmegaStep::new(vec![], p.clone(), f("0 = 0").unwrap()).unwrap_err(),
        OmegaStepError::NotUniversal
    );
    assert!(matches!(
        OmegaStep::new(vec![], p, f("forall x. x = y").unwrap()),
        Err(OmegaStepError::FreeVariable(_))
    ));
}

#[test]
fn whole_proofs() {
    let m = machine("LOOP");
    let p = OmegaProof::new(vec![OmegaProofStep::Omega(build_loops_certificate(&m, 0))]).unwrap();
    let q = loops_formula(&m, 0);
    assert_eq!(
        check_omega_proof(&[], &p, &q, 25, DEFAULT_INSTANCE_BUDGET),
        OmegaProofVerdict::AcceptedConditional { k: 25 }
    );
    match check_omega_proof(&[], &p, &loops_formula(&m, 1), 25, DEFAULT_INSTANCE_BUDGET) {
        OmegaProofVerdict::Rejected(r) => {
            assert_eq!((r.step, r.reason), (1, RejectReason::TargetMismatch))
        }
        v => panic!("{v:?}"),
    }
    // a later finitary step may instantiate the ω-conclusion
    let text = format!(
        "1. {q} BY OMEGA loops LOOP 0 64\n2. {} BY INST 0 [1]\n",
        crate::arithmetize::loops_instance(&m, 0, 64, 0).unwrap()
    );
    let p2 = parse_omega_proof_text(&text, corpus_machine).unwrap();
    assert!(check_omega_proof(&[], &p2, p2.target(), 5, DEFAULT_INSTANCE_BUDGET).is_accepted());
    let printed = print_omega_proof_text(&p2, |d| {
        crate::machines::CORPUS_NAMES.iter().find(|n| corpus_machine(n).as_ref() == Some(d)).map(|n| n.to_string())
    })
    .unwrap();
    assert_eq!(parse_omega_proof_text(&printed, corpus_machine).unwrap(), p2);
}

#[test]
fn finitary_proofs_embed() {
    let good = parse_proof_text("1. 0 = 0 BY EVAL").unwrap();
    let target = good.target().clone();
    let embedded = OmegaProof::from(good.clone());
    assert!(!embedded.has_omega_step());
    assert_eq!(
        check_omega_proof(&[], &embedded, &target, 3, 10),
        OmegaProofVerdict::AcceptedConditional { k: 3 }
    );
    let bad = parse_proof_text("1. 0 = 0 BY EVAL\n2. 0 = 0 BY MP [1, 3]").unwrap();
    let Verdict::Rejected(expected) = check_proof(&[], &bad, &target) else { panic!() };
    assert_eq!(
        check_omega_proof(&[], &OmegaProof::from(bad), &target, 3, 10),
        OmegaProofVerdict::Rejected(expected)
    );
    // bytes of a finitary proof decode as an ω-proof
    let bytes = serialize_proof(&good);
    assert_eq!(deserialize_omega_proof(&bytes).unwrap(), embedded);
}

#[test]
fn omega_binary_round_trip() {
    let m = machine("EVEN");
    let p = OmegaProof::new(vec![OmegaProofStep::Omega(build_loops_certificate(&m, 3))]).unwrap();
    let bytes = serialize_omega_proof(&p).unwrap();
    assert_eq!(bytes[2], OMEGA_TAG);
    assert_eq!(deserialize_omega_proof(&bytes).unwrap(), p);
    let mut trailing = bytes.clone();
    trailing.push(0);
    assert!(deserialize_omega_proof(&trailing).is_err());
    let opaque = OmegaProof::new(vec![OmegaProofStep::Omega(trivial_step(Arc::new(Garbage { bad: 0 })))]).unwrap();
    assert_eq!(serialize_omega_proof(&opaque), Err(NotSerializable { step: 1 }));
}

#[test]
fn smaller_bound_still_accepts() {
    let s = build_loops_certificate(&machine("LOOP"), 2);
    for k in [0, 3, 7] {
        assert_eq!(check_omega_bounded(&s, k, DEFAULT_INSTANCE_BUDGET), OmegaVerdict::AcceptedUpTo(k));
    }
    let mut meter = Meter::new(u64::MAX);
    s.premise().produce(3, &mut meter).unwrap();
    let tight = meter.used() - 1;
    assert_eq!(check_omega_bounded(&s, 7, tight), OmegaVerdict::BudgetExhausted { instance: 3 });
}
