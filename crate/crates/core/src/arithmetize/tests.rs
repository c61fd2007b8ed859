use super::*;
use crate::kernel::{check_proof, Verdict};
use crate::logic::{eval_bounded, substitute};
use crate::machines::{corpus_machine, run, trace, RunOutcome};

fn machine(name: &str) -> MachineDesc {
    corpus_machine(name).unwrap()
}

fn holds(f: &Formula) -> bool {
    eval_bounded(f).unwrap()
}

fn expected(m: &MachineDesc, n: u64, t: u64, o: Outcome) -> bool {
    run(m, n, t).outcome() == Some(o)
}

#[test]
fn halted_by_examples() {
    let f = halted_by_formula(&machine("ALWAYS_YES"), 5, 1, Outcome::Yes).unwrap();
    assert!(f.is_sentence() && f.is_delta0());
    assert!(holds(&f));
    assert!(!holds(&halted_by_formula(&machine("LOOP"), 0, 50, Outcome::Yes).unwrap()));
    assert!(holds(&halted_by_formula(&machine("EVEN"), 3, 100, Outcome::No).unwrap()));
    assert!(!holds(&halted_by_formula(&machine("ALWAYS_YES"), 0, 0, Outcome::Yes).unwrap()));
}

#[test]
fn agrees_with_simulator_on_small_runs() {
    for name in ["EVEN", "BUSY3"] {
        let m = machine(name);
        for n in 0..4 {
            for t in 0..17 {
                for o in [Outcome::Yes, Outcome::No] {
                    let f = halted_by_formula(&m, n, t, o).unwrap();
                    assert_eq!(holds(&f), expected(&m, n, t, o), "{name} {n} {t} {o}");
                }
            }
        }
    }
}

#[test]
fn instance_matches_substitution() {
    let m = machine("EVEN");
    let open = halted_by_open(&m, 2, Outcome::Yes, 6).unwrap();
    assert_eq!(open.free_vars().into_iter().collect::<Vec<_>>(), vec![time_var()]);
    for t in 0..8 {
        let inst = halted_by_instance(&m, 2, Outcome::Yes, 6, t).unwrap();
        assert_eq!(substitute(&open, &time_var(), &numeral(t)), inst);
        assert_eq!(holds(&inst), t >= 4);
    }
    assert_eq!(
        halted_by_formula(&m, 2, 6, Outcome::Yes).unwrap(),
        halted_by_instance(&m, 2, Outcome::Yes, 6, 6).unwrap()
    );
}

#[test]
fn sentence_shapes() {
    let m = machine("LOOP");
    for f in [halts_yes_formula(&m, 0), halts_no_formula(&m, 0)] {
        match &f {
            Formula::Exists(_, body) => assert!(body.is_delta0()),
            other => panic!("{other}"),
        }
        assert!(f.is_sentence() && !f.is_delta0());
    }
    match loops_formula(&m, 0) {
        Formula::ForAll(_, body) => assert!(body.is_delta0()),
        other => panic!("{other}"),
    }
    assert!(holds(&loops_instance(&m, 0, DEFAULT_HORIZON, 10).unwrap()));
    let yes = machine("ALWAYS_YES");
    assert!(!holds(&loops_instance(&yes, 0, DEFAULT_HORIZON, 1).unwrap()));
}

#[test]
fn looping_machine_never_halts_in_sweep() {
    let m = machine("LOOP");
    for t in (0..=200).step_by(25) {
        let inst = halted_by_instance(&m, 0, Outcome::Yes, 200, t).unwrap();
        assert!(!holds(&inst));
    }
}

#[test]
fn witness_proof_is_accepted() {
    let m = machine("ALWAYS_YES");
    let p = halting_witness_proof(&m, 0, Outcome::Yes, DEFAULT_HORIZON, 1).unwrap();
    assert_eq!(check_proof(&[], &p, &halts_yes_formula(&m, 0)), Verdict::Accepted);
    let even = machine("EVEN");
    let RunOutcome::No(s) = run(&even, 3, 100) else { panic!() };
    let p = halting_witness_proof(&even, 3, Outcome::No, DEFAULT_HORIZON, s).unwrap();
    assert!(check_proof(&[], &p, &halts_no_formula(&even, 3)).is_accepted());
    let bad = halting_witness_proof(&even, 3, Outcome::No, DEFAULT_HORIZON, s - 1).unwrap();
    assert!(!check_proof(&[], &bad, &halts_no_formula(&even, 3)).is_accepted());
}

#[test]
fn horizon_limit() {
    let m = machine("LOOP");
    assert!(matches!(
        halted_by_formula(&m, 0, MAX_HORIZON + 1, Outcome::Yes),
        Err(EncodingOverflow::Horizon { .. })
    ));
}

#[test]
fn config_codes_round_trip() {
    let m = machine("BUSY3");
    let enc = TraceEncoding::new(m.clone(), 16).unwrap();
    assert!(enc.base() > (m.symbols().len() * m.states().len()) as u64);
    let configs = trace(&m, 2, 100);
    let codes: Vec<_> = configs.iter().map(|c| enc.encode(c).unwrap()).collect();
    for (c, code) in configs.iter().zip(&codes) {
        assert_eq!(enc.decode(code).as_ref(), Some(c));
    }
    let mut sorted = codes.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), codes.len());
    let mut far = configs[0].clone();
    far.head = 17;
    assert!(matches!(enc.encode(&far), Err(EncodingOverflow::Window { radius: 16 })));
}
