//! Human-readable proofs, one step per line:
//!
//! ```text
//! 1. 0 = 0 -> 0 = 0 BY PREMISE
//! 2. 0 = 0 BY EVAL
//! 3. 0 = 0 BY MP [2, 1]
//! ```
//!
//! Rules: `PA n`, `INDUCTION`, `EQ`, `LOGIC name`, `LOGIC exists-intro t`,
//! `MP [minor, major]`, `GEN [i]`, `INST t [i]`, `EVAL`, `PREMISE`.
//! Lines starting with `#` and blank lines are ignored.

use std::fmt::Write;

use thiserror::Error;

use crate::logic::{parse_formula, parse_term, Formula};

use super::{LogicalScheme, Proof, ProofStep, Rule};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ProofTextError {
    pub line: usize,
    pub message: String,
}

pub(crate) fn text_error(line: usize, message: impl Into<String>) -> ProofTextError {
    ProofTextError { line, message: message.into() }
}

pub(crate) struct RawLine<'a> {
    pub line: usize,
    pub conclusion: Formula,
    pub rule: &'a str,
}

/// Splits numbered lines into conclusion and rule text, checking that
/// the numbers run 1, 2, 3, ...
pub(crate) fn raw_lines(text: &str) -> Result<Vec<RawLine<'_>>, ProofTextError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (num, rest) = trimmed
            .split_once('.')
            .ok_or_else(|| text_error(line, "expected `k. <formula> BY <rule>`"))?;
        let number: usize = num
            .trim()
            .parse()
            .map_err(|_| text_error(line, format!("bad step number `{}`", num.trim())))?;
        if number != out.len() + 1 {
            return Err(text_error(line, format!("expected step {}, found {number}", out.len() + 1)));
        }
        let (formula_text, rule) = rest
            .rsplit_once(" BY ")
            .ok_or_else(|| text_error(line, "missing ` BY <rule>`"))?;
        let conclusion = parse_formula(formula_text)
            .map_err(|e| text_error(line, format!("column {}: {}", e.offset, e.message)))?;
        out.push(RawLine { line, conclusion, rule: rule.trim() });
    }
    if out.is_empty() {
        return Err(text_error(0, "proof has no steps"));
    }
    Ok(out)
}

fn indices(line: usize, s: &str, want: usize) -> Result<Vec<usize>, ProofTextError> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| text_error(line, format!("expected premise list, found `{s}`")))?;
    let v: Vec<usize> = inner
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| text_error(line, format!("bad premise list `{s}`")))?;
    if v.len() != want {
        return Err(text_error(line, format!("expected {want} premise(s), found {}", v.len())));
    }
    Ok(v)
}

pub(crate) fn parse_rule(line: usize, text: &str) -> Result<Rule, ProofTextError> {
    let (head, rest) = text.split_once(' ').unwrap_or((text, ""));
    let rest = rest.trim();
    let term = |s: &str| {
        parse_term(s.trim()).map_err(|e| text_error(line, format!("term: {}", e.message)))
    };
    let no_args = |r: Rule| {
        if rest.is_empty() {
            Ok(r)
        } else {
            Err(text_error(line, format!("`{head}` takes no arguments")))
        }
    };
    match head {
        "PA" => rest
            .parse::<u8>()
            .map(Rule::PaAxiom)
            .map_err(|_| text_error(line, format!("bad axiom index `{rest}`"))),
        "INDUCTION" => no_args(Rule::Induction),
        "EQ" => no_args(Rule::Equality),
        "EVAL" => no_args(Rule::EvalTrue),
        "PREMISE" => no_args(Rule::Premise),
        "LOGIC" => {
            let (name, arg) = rest.split_once(' ').unwrap_or((rest, ""));
            let id = LogicalScheme::NAMES
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| text_error(line, format!("unknown scheme `{name}`")))?;
            let witness = if id == 10 { Some(term(arg)?) } else { None };
            if id != 10 && !arg.trim().is_empty() {
                return Err(text_error(line, format!("scheme `{name}` takes no argument")));
            }
            LogicalScheme::from_id(id as u8, witness)
                .map(Rule::Logical)
                .ok_or_else(|| text_error(line, "bad scheme"))
        }
        "MP" => {
            let v = indices(line, rest, 2)?;
            Ok(Rule::ModusPonens { minor: v[0], major: v[1] })
        }
        "GEN" => Ok(Rule::Generalization { premise: indices(line, rest, 1)?[0] }),
        "INST" => {
            let open = rest
                .rfind('[')
                .ok_or_else(|| text_error(line, "INST needs a term and a premise"))?;
            let premise = indices(line, &rest[open..], 1)?[0];
            Ok(Rule::Instantiation { premise, term: term(&rest[..open])? })
        }
        other => Err(text_error(line, format!("unknown rule `{other}`"))),
    }
}

pub(crate) fn rule_text(rule: &Rule) -> String {
    match rule {
        Rule::PaAxiom(i) => format!("PA {i}"),
        Rule::Induction => "INDUCTION".into(),
        Rule::Equality => "EQ".into(),
        Rule::Logical(LogicalScheme::ExistsIntro(t)) => format!("LOGIC exists-intro {t}"),
        Rule::Logical(s) => format!("LOGIC {}", s.name()),
        Rule::ModusPonens { minor, major } => format!("MP [{minor}, {major}]"),
        Rule::Generalization { premise } => format!("GEN [{premise}]"),
        Rule::Instantiation { premise, term } => format!("INST {term} [{premise}]"),
        Rule::EvalTrue => "EVAL".into(),
        Rule::Premise => "PREMISE".into(),
    }
}

pub fn parse_proof_text(text: &str) -> Result<Proof, ProofTextError> {
    let steps = raw_lines(text)?
        .into_iter()
        .map(|raw| Ok(ProofStep::new(raw.conclusion, parse_rule(raw.line, raw.rule)?)))
        .collect::<Result<Vec<_>, ProofTextError>>()?;
    Ok(Proof::new(steps).expect("raw_lines rejects empty proofs"))
}

pub fn print_proof_text(p: &Proof) -> String {
    let mut out = String::new();
    for (i, s) in p.steps().iter().enumerate() {
        let _ = writeln!(out, "{}. {} BY {}", i + 1, s.conclusion, rule_text(&s.rule));
    }
    out
}
