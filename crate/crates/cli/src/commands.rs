use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use peano_omega::arithmetize::{
    halted_by_formula, halts_no_formula, halts_yes_formula, loops_formula, EncodingOverflow,
};
use peano_omega::dovetail::{run_h, HConfig, HOutcome, Mode};
use peano_omega::kernel::{check_proof, RejectReason, Verdict};
use peano_omega::DecodeError;
use peano_omega::logic::{parse_formula, Formula};
use peano_omega::machines::{corpus_machine, run, MachineDesc, Outcome, RunOutcome};
use peano_omega::omega::{
    build_loops_certificate_with_horizon, check_omega_bounded, check_omega_proof,
    deserialize_omega_proof, parse_omega_proof_text, OmegaProof, OmegaProofVerdict, OmegaVerdict,
};

use crate::report::Report;

pub const OK: u8 = 0;
pub const REJECTED: u8 = 2;
pub const EXHAUSTED: u8 = 3;
pub const PARSE_ERROR: u8 = 4;
pub const OVERFLOW: u8 = 5;

pub fn error_code(e: &anyhow::Error) -> u8 {
    if e.chain().any(|c| c.is::<EncodingOverflow>()) {
        OVERFLOW
    } else {
        PARSE_ERROR
    }
}

/// A corpus name, or else a path to a machine file.
pub fn resolve_machine(name: &str) -> Result<MachineDesc> {
    if let Some(m) = corpus_machine(name) {
        return Ok(m);
    }
    let text = fs::read_to_string(name).with_context(|| format!("reading machine `{name}`"))?;
    MachineDesc::parse(&text).with_context(|| format!("parsing machine `{name}`"))
}

fn formula(text: &str) -> Result<Formula> {
    parse_formula(text).with_context(|| format!("parsing formula `{text}`"))
}

/// The parsed proof, or the decoding error of a binary file.
fn read_proof(path: &Path) -> Result<Result<OmegaProof, DecodeError>> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let is_text = bytes
        .iter()
        .find(|b| !b.is_ascii_whitespace())
        .is_some_and(|b| b.is_ascii_digit() || *b == b'#');
    if is_text {
        let text = String::from_utf8(bytes).context("proof text is not UTF-8")?;
        Ok(Ok(parse_omega_proof_text(&text, |name| resolve_machine(name).ok())?))
    } else {
        Ok(deserialize_omega_proof(&bytes))
    }
}

fn read_gamma(path: Option<&Path>) -> Result<Vec<Formula>> {
    let Some(path) = path else { return Ok(Vec::new()) };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(formula)
        .collect()
}

pub fn check(path: &Path, target: &str, gamma: Option<&Path>, k: u64, instance_budget: u64) -> Result<Report> {
    let proof = read_proof(path)?;
    let target = match target.strip_prefix('@') {
        Some(file) => formula(fs::read_to_string(file).with_context(|| format!("reading {file}"))?.trim())?,
        None => formula(target)?,
    };
    let gamma = read_gamma(gamma)?;
    let base = |code| Report::new(code);
    let proof = match proof {
        Ok(p) => p,
        Err(e) => {
            return Ok(base(REJECTED)
                .field("verdict", "rejected")
                .field("step", 0)
                .field("reason", RejectReason::MalformedEncoding)
                .field("detail", e)
                .field("proof", path.display()))
        }
    };
    let report = match proof.to_finitary() {
        Some(p) => match check_proof(&gamma, &p, &target) {
            Verdict::Accepted => base(OK).field("verdict", "accepted"),
            Verdict::Rejected(r) => base(REJECTED)
                .field("verdict", "rejected")
                .field("step", r.step)
                .field("reason", r.reason)
                .field("detail", r.detail),
        },
        None => match check_omega_proof(&gamma, &proof, &target, k, instance_budget) {
            OmegaProofVerdict::AcceptedConditional { k } => base(OK)
                .field("verdict", format!("accepted (conditional on k={k})"))
                .field("k", k)
                .field("instance_budget", instance_budget),
            OmegaProofVerdict::Rejected(r) => base(REJECTED)
                .field("verdict", "rejected")
                .field("step", r.step)
                .field("reason", r.reason)
                .field("detail", r.detail),
            OmegaProofVerdict::BudgetExhausted { step, instance } => base(EXHAUSTED)
                .field("verdict", "budget-exhausted")
                .field("step", step)
                .field("instance", instance)
                .field("instance_budget", instance_budget),
        },
    };
    Ok(report.field("proof", path.display()))
}

fn parse_outcome(s: &str) -> Result<Outcome> {
    match s {
        "yes" => Ok(Outcome::Yes),
        "no" => Ok(Outcome::No),
        other => bail!("outcome must be `yes` or `no`, found `{other}`"),
    }
}

pub fn encode(machine: &str, n: u64, which: &str, t: Option<u64>, outcome: Option<&str>) -> Result<Report> {
    let m = resolve_machine(machine)?;
    let (f, shape) = match (which, t, outcome) {
        ("q1", None, None) => (halts_yes_formula(&m, n), "sigma1"),
        ("q2", None, None) => (halts_no_formula(&m, n), "sigma1"),
        ("q3", None, None) => (loops_formula(&m, n), "pi1"),
        ("haltedby", Some(t), Some(o)) => (halted_by_formula(&m, n, t, parse_outcome(o)?)?, "delta0"),
        ("haltedby", ..) => bail!("haltedby needs a step bound and an outcome"),
        (other, ..) => bail!("unknown statement `{other}`; expected q1, q2, q3 or haltedby"),
    };
    let text = f.to_string();
    Ok(Report::new(OK).field("shape", shape).field("formula", &text).plain(text))
}

pub fn simulate(machine: &str, n: u64, budget: u64) -> Result<Report> {
    let m = resolve_machine(machine)?;
    let r = run(&m, n, budget);
    let (code, outcome) = match r {
        RunOutcome::Yes(_) => (OK, "yes"),
        RunOutcome::No(_) => (REJECTED, "no"),
        RunOutcome::Timeout => (EXHAUSTED, "timeout"),
    };
    let mut report = Report::new(code).field("outcome", outcome);
    if let Some(s) = r.steps() {
        report = report.field("steps", s);
    }
    Ok(report.field("budget", budget))
}

pub fn hsearch(machine: &str, n: u64, cfg: &HConfig, proof_out: Option<&Path>) -> Result<Report> {
    let m = resolve_machine(machine)?;
    let out = run_h(&m, n, cfg);
    let mode = match cfg.mode {
        Mode::Pure => "pure",
        Mode::Witness => "witness",
    };
    let base = |code| {
        Report::new(code)
            .field("mode", mode)
            .field("budget_steps", cfg.budget.max_total_oracle_steps)
            .field("budget_candidates", cfg.budget.max_candidates)
            .field("k", cfg.k)
            .field("instance_budget", cfg.instance_budget)
    };
    let (name, found) = match &out {
        HOutcome::HaltsYes(f) => ("halts_yes", f),
        HOutcome::HaltsNo(f) => ("halts_no", f),
        HOutcome::Loops { found, .. } => ("loops", found),
        HOutcome::BudgetExhausted(p) => {
            let mut r = base(EXHAUSTED).field("outcome", "budget_exhausted");
            for (i, t) in p.threads.iter().enumerate() {
                r = r.field(
                    ["thread1", "thread2", "thread3"][i],
                    format!(
                        "candidates={} steps={} rounds={}",
                        t.candidates_opened, t.oracle_steps, t.rounds_completed
                    ),
                );
            }
            return Ok(r);
        }
    };
    let path = match proof_out {
        Some(p) => {
            fs::write(p, &found.bytes).with_context(|| format!("writing {}", p.display()))?;
            p.display().to_string()
        }
        None => "-".to_string(),
    };
    let mut r = base(OK)
        .field("outcome", name)
        .field("thread", out.thread().expect("decided"))
        .field("candidate_index", found.index)
        .field("oracle_steps", found.oracle_steps)
        .field("proof_bytes", found.bytes.len())
        .field("proof", path);
    if let HOutcome::Loops { k, .. } = out {
        r = r.field("conditional_on_k", k);
    }
    Ok(r)
}

pub fn omega_check(kind: &str, machine: &str, n: u64, horizon: u64, k: u64, instance_budget: u64) -> Result<Report> {
    if kind != "loops-cert" {
        bail!("unknown certificate `{kind}`; expected loops-cert");
    }
    let m = resolve_machine(machine)?;
    let step = build_loops_certificate_with_horizon(&m, n, horizon)?;
    let base = |code| {
        Report::new(code)
            .field("k", k)
            .field("instance_budget", instance_budget)
            .field("horizon", horizon)
    };
    Ok(match check_omega_bounded(&step, k, instance_budget) {
        OmegaVerdict::AcceptedUpTo(k) => base(OK).field("verdict", format!("accepted_up_to({k})")),
        OmegaVerdict::Rejected { instance, reason, detail } => base(REJECTED)
            .field("verdict", "rejected")
            .field("instance", instance)
            .field("reason", reason)
            .field("detail", detail),
        OmegaVerdict::BudgetExhausted { instance } => {
            base(EXHAUSTED).field("verdict", "budget_exhausted").field("instance", instance)
        }
    })
}
