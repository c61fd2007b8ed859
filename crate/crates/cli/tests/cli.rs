use std::fs;
use std::process::{Command, Output};

use peano_omega::arithmetize::loops_formula;
use peano_omega::logic::{eval_bounded, parse_formula, Formula};
use peano_omega::machines::corpus_machine;

fn pomega(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pomega"))
        .args(args)
        .env_remove("POMEGA_K")
        .env_remove("POMEGA_INSTANCE_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn kv(o: &Output, key: &str) -> Option<String> {
    stdout(o)
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")).map(str::to_string))
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let proof = dir.path().join("p.txt");
    fs::write(&proof, "1. 0 = 0 BY EVAL\n").unwrap();
    let p = proof.to_str().unwrap();
    assert_eq!(code(&pomega(&["check", p, "0 = 0"])), 0);
    let wrong = pomega(&["check", p, "S(0) = S(0)", "--format", "kv"]);
    assert_eq!(code(&wrong), 2);
    assert_eq!(kv(&wrong, "reason").as_deref(), Some("target-mismatch"));
    assert_eq!(code(&pomega(&["check", p, "0 = "])), 4);

    let garbage = dir.path().join("g.bin");
    fs::write(&garbage, [0xffu8, 0x13]).unwrap();
    let g = pomega(&["check", garbage.to_str().unwrap(), "0 = 0", "--format", "kv"]);
    assert_eq!(code(&g), 2);
    assert_eq!(kv(&g, "reason").as_deref(), Some("malformed-encoding"));
}

#[test]
fn check_premises_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let proof = dir.path().join("p.txt");
    fs::write(&proof, "1. x = 0 BY PREMISE\n").unwrap();
    let gamma = dir.path().join("gamma.txt");
    fs::write(&gamma, "# premises\nx = 0\n").unwrap();
    let p = proof.to_str().unwrap();
    assert_eq!(code(&pomega(&["check", p, "x = 0"])), 2);
    assert_eq!(code(&pomega(&["check", p, "x = 0", "--gamma", gamma.to_str().unwrap()])), 0);
}

#[test]
fn omega_proof_is_conditional() {
    let dir = tempfile::tempdir().unwrap();
    let q3 = loops_formula(&corpus_machine("LOOP").unwrap(), 0).to_string();
    let proof = dir.path().join("o.txt");
    fs::write(&proof, format!("1. {q3} BY OMEGA loops LOOP 0 64\n")).unwrap();
    let target = dir.path().join("q3.txt");
    fs::write(&target, &q3).unwrap();
    let out = pomega(&[
        "check",
        proof.to_str().unwrap(),
        &format!("@{}", target.display()),
        "--k",
        "25",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("conditional on k=25"), "{}", stdout(&out));
}

#[test]
fn encode_statements() {
    let q1 = pomega(&["encode", "ALWAYS_YES", "0", "q1"]);
    assert_eq!(code(&q1), 0);
    let f = parse_formula(stdout(&q1).trim()).unwrap();
    assert!(matches!(&f, Formula::Exists(_, b) if b.is_delta0()) && f.is_sentence());

    let q3 = pomega(&["encode", "LOOP", "0", "q3"]);
    let f = parse_formula(stdout(&q3).trim()).unwrap();
    assert!(matches!(&f, Formula::ForAll(_, b) if b.is_delta0()));

    let h = pomega(&["encode", "EVEN", "4", "haltedby", "100", "yes"]);
    let f = parse_formula(stdout(&h).trim()).unwrap();
    assert!(f.is_sentence() && eval_bounded(&f).unwrap());

    assert_eq!(code(&pomega(&["encode", "EVEN", "4", "haltedby", "100000", "yes"])), 5);
    assert_eq!(code(&pomega(&["encode", "EVEN", "4", "q7"])), 4);
    assert_eq!(code(&pomega(&["encode", "NO_SUCH_MACHINE", "4", "q1"])), 4);
}

#[test]
fn simulate_exit_codes() {
    assert_eq!(code(&pomega(&["simulate", "LOOP", "0", "--budget", "100"])), 3);
    let yes = pomega(&["simulate", "EVEN", "4", "--format", "kv"]);
    assert_eq!(code(&yes), 0);
    assert_eq!(kv(&yes, "steps").as_deref(), Some("6"));
    assert_eq!(code(&pomega(&["simulate", "EVEN", "3"])), 2);
}

#[test]
fn machine_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("even.tm");
    fs::write(&path, corpus_machine("EVEN").unwrap().to_text()).unwrap();
    assert_eq!(code(&pomega(&["simulate", path.to_str().unwrap(), "2"])), 0);
}

#[test]
fn hsearch_writes_a_reverifiable_proof() {
    let dir = tempfile::tempdir().unwrap();
    let proof = dir.path().join("w.bin");
    let out = pomega(&[
        "hsearch",
        "ALWAYS_YES",
        "5",
        "--mode",
        "witness",
        "--proof-out",
        proof.to_str().unwrap(),
        "--format",
        "kv",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(kv(&out, "thread").as_deref(), Some("1"));
    assert_eq!(kv(&out, "outcome").as_deref(), Some("halts_yes"));
    let q1 = dir.path().join("q1.txt");
    fs::write(&q1, stdout(&pomega(&["encode", "ALWAYS_YES", "5", "q1"]))).unwrap();
    let again = pomega(&["check", proof.to_str().unwrap(), &format!("@{}", q1.display())]);
    assert_eq!(code(&again), 0);
}

#[test]
fn hsearch_pure_mode_exhausts() {
    let out = pomega(&["hsearch", "LOOP", "0", "--mode", "pure", "--budget-steps", "50", "--format", "kv"]);
    assert_eq!(code(&out), 3);
    assert_eq!(kv(&out, "outcome").as_deref(), Some("budget_exhausted"));
}

#[test]
fn omega_check_verdicts() {
    assert_eq!(code(&pomega(&["omega-check", "loops-cert", "LOOP", "0", "--k", "50"])), 0);
    let rej = pomega(&["omega-check", "loops-cert", "ALWAYS_YES", "0", "--k", "5", "--format", "kv"]);
    assert_eq!(code(&rej), 2);
    assert_eq!(kv(&rej, "instance").as_deref(), Some("1"));
    assert_eq!(kv(&rej, "reason").as_deref(), Some("eval-false"));
    let ex = pomega(&["omega-check", "loops-cert", "LOOP", "0", "--instance-budget", "5"]);
    assert_eq!(code(&ex), 3);
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_pomega"))
        .args(["omega-check", "loops-cert", "LOOP", "0", "--format", "kv"])
        .env("POMEGA_K", "3")
        .output()
        .unwrap();
    assert_eq!(kv(&out, "k").as_deref(), Some("3"));
}

#[test]
fn reports_are_stable() {
    let a = pomega(&["hsearch", "EVEN", "3", "--format", "kv"]);
    let b = pomega(&["hsearch", "EVEN", "3", "--format", "kv"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
}
