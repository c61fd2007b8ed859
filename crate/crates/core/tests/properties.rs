use std::collections::{BTreeMap, HashMap};

use peano_omega::arithmetize::{halted_by_formula, TraceEncoding};
use peano_omega::kernel::{
    check_proof, decode_formula, encode_formula, shortlex_index, shortlex_string, Alphabet,
};
use peano_omega::logic::{eval_bounded, numeral, parse_formula, substitute, Formula, Ident, Term};
use peano_omega::machines::{run, trace, MachineDesc, Move, Outcome, Transition};
use proptest::prelude::*;

mod common;

fn var() -> impl Strategy<Value = Ident> {
    prop::sample::select(vec!["x", "y", "z"]).prop_map(|s| Ident::new(s).unwrap())
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![(0u64..4).prop_map(numeral), var().prop_map(|x| Term::var(&x))];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::succ),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::add(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Term::mul(a, b)),
        ]
    })
}

/// Formulas with bounded quantifiers only; bounds are numerals up to 10.
fn bounded_formula() -> impl Strategy<Value = Formula> {
    let atom = prop_oneof![
        (term(), term()).prop_map(|(a, b)| Formula::eq(a, b)),
        (term(), term()).prop_map(|(a, b)| Formula::le(a, b)),
    ];
    atom.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (var(), 0u64..=10, inner.clone(), any::<bool>()).prop_map(|(x, n, body, all)| {
                if all {
                    Formula::bounded_forall(&x, numeral(n), body)
                } else {
                    Formula::bounded_exists(&x, numeral(n), body)
                }
            }),
        ]
    })
}

fn any_formula() -> impl Strategy<Value = Formula> {
    (bounded_formula(), var(), any::<u8>()).prop_map(|(f, x, k)| match k % 3 {
        0 => Formula::forall(&x, f),
        1 => Formula::exists(&x, f),
        _ => f,
    })
}

/// Plain recursive evaluator with no short-circuiting.
fn naive(f: &Formula, env: &mut HashMap<Ident, u128>) -> Option<bool> {
    fn t(x: &Term, env: &HashMap<Ident, u128>) -> Option<u128> {
        Some(match x {
            Term::Zero => 0,
            Term::Succ(a) => t(a, env)?.checked_add(1)?,
            Term::Add(a, b) => t(a, env)?.checked_add(t(b, env)?)?,
            Term::Mul(a, b) => t(a, env)?.checked_mul(t(b, env)?)?,
            Term::Var(v) => *env.get(v)?,
        })
    }
    Some(match f {
        Formula::Eq(a, b) => t(a, env)? == t(b, env)?,
        Formula::Le(a, b) => t(a, env)? <= t(b, env)?,
        Formula::Not(g) => !naive(g, env)?,
        Formula::And(a, b) => {
            let (x, y) = (naive(a, env)?, naive(b, env)?);
            x && y
        }
        Formula::Or(a, b) => {
            let (x, y) = (naive(a, env)?, naive(b, env)?);
            x || y
        }
        Formula::Implies(a, b) => {
            let (x, y) = (naive(a, env)?, naive(b, env)?);
            !x || y
        }
        Formula::BoundedForAll(x, bound, body) | Formula::BoundedExists(x, bound, body) => {
            let n = t(bound, env)?;
            let saved = env.get(x).copied();
            let mut results = Vec::new();
            for v in 0..=n {
                env.insert(x.clone(), v);
                results.push(naive(body, env));
            }
            match saved {
                Some(s) => env.insert(x.clone(), s),
                None => env.remove(x),
            };
            let results: Option<Vec<bool>> = results.into_iter().collect();
            let results = results?;
            if matches!(f, Formula::BoundedForAll(..)) {
                results.iter().all(|b| *b)
            } else {
                results.iter().any(|b| *b)
            }
        }
        Formula::ForAll(..) | Formula::Exists(..) => return None,
    })
}

fn close(f: Formula) -> Formula {
    f.free_vars()
        .into_iter()
        .fold(f, |g, x| substitute(&g, &x, &numeral(2)))
}

fn machine() -> impl Strategy<Value = MachineDesc> {
    (2usize..5, 2usize..4).prop_flat_map(|(extra, nsym)| {
        let states = extra + 2;
        let row = (0..states as u16, 0..nsym as u16, any::<bool>(), any::<bool>());
        prop::collection::vec(prop::option::weighted(0.85, row), extra * nsym).prop_map(move |rows| {
            let names: Vec<String> = (0..states).map(|i| format!("s{i}")).collect();
            let symbols: Vec<String> = ["_", "1", "x"][..nsym].iter().map(|s| s.to_string()).collect();
            let mut transitions = BTreeMap::new();
            for (k, r) in rows.into_iter().enumerate() {
                let Some((next, write, right, _)) = r else { continue };
                let q = (k / nsym) as u16 + 2;
                let a = (k % nsym) as u16;
                let mv = if right { Move::R } else { Move::L };
                transitions.insert((q, a), Transition { next, write, mv });
            }
            MachineDesc::new(names, symbols, 0, 2, 0, 1, transitions).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity(f in any_formula()) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn binary_formula_round_trip(f in any_formula()) {
        let mut bytes = Vec::new();
        encode_formula(&mut bytes, &f);
        prop_assert_eq!(decode_formula(&bytes).unwrap(), f);
    }

    #[test]
    fn evaluator_matches_naive_interpreter(f in bounded_formula()) {
        let f = close(f);
        let expected = naive(&f, &mut HashMap::new());
        match eval_bounded(&f) {
            Ok(b) => prop_assert_eq!(Some(b), expected),
            Err(_) => prop_assert!(expected.is_none()),
        }
    }

    #[test]
    fn substitution_agrees_with_environment(f in bounded_formula(), v in 0u128..5) {
        let x = Ident::new("x").unwrap();
        let others: Vec<Ident> = f.free_vars().into_iter().filter(|y| *y != x).collect();
        let f = others.iter().fold(f, |g, y| substitute(&g, y, &numeral(1)));
        let mut env = HashMap::from([(x.clone(), v)]);
        let direct = naive(&f, &mut env);
        let replaced = eval_bounded(&substitute(&f, &x, &numeral(v as u64))).ok();
        if let (Some(a), Some(b)) = (direct, replaced) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn shortlex_is_a_bijection(bytes in prop::collection::vec(0u8..4, 0..8)) {
        let a = Alphabet::new(&[0, 1, 2, 3]).unwrap();
        let i = shortlex_index(&bytes, &a).unwrap();
        prop_assert_eq!(shortlex_string(i, &a), bytes);
    }

    #[test]
    fn machine_text_round_trip(m in machine()) {
        prop_assert_eq!(MachineDesc::parse(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn config_codes_invert(m in machine(), n in 0u64..4) {
        let enc = TraceEncoding::new(m.clone(), 12).unwrap();
        for c in trace(&m, n, 12) {
            let code = enc.encode(&c).unwrap();
            prop_assert_eq!(enc.decode(&code), Some(c));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn halting_formula_matches_random_machines(m in machine(), n in 0u64..3, t in 0u64..10) {
        for o in [Outcome::Yes, Outcome::No] {
            let got = eval_bounded(&halted_by_formula(&m, n, t, o).unwrap()).unwrap();
            prop_assert_eq!(got, run(&m, n, t).outcome() == Some(o));
        }
    }

    #[test]
    fn halting_is_exclusive_and_monotone(m in machine(), n in 0u64..3) {
        let mut seen = [false, false];
        for t in 0..10 {
            let yes = eval_bounded(&halted_by_formula(&m, n, t, Outcome::Yes).unwrap()).unwrap();
            let no = eval_bounded(&halted_by_formula(&m, n, t, Outcome::No).unwrap()).unwrap();
            prop_assert!(!(yes && no));
            prop_assert!(yes || !seen[0]);
            prop_assert!(no || !seen[1]);
            seen = [yes, no];
        }
    }
}

#[test]
fn acceptance_is_monotone_in_premises() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let p = common::derivation(&mut rng, 6);
        let target = p.target().clone();
        assert!(check_proof(&[], &p, &target).is_accepted());
        let extra = vec![common::closed_delta0(&mut rng, 2), parse_formula("x = 0").unwrap()];
        assert!(check_proof(&extra[..1], &p, &target).is_accepted());
        assert!(check_proof(&extra, &p, &target).is_accepted());
    }
}
