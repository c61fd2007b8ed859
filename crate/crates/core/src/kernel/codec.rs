//! Canonical binary encoding of terms, formulas and proofs.
//!
//! Every node is a tag byte followed by its fields; names carry a
//! big-endian `u16` length prefix, step numbers are big-endian `u16`.
//!
//! ```text
//! term     0 zero | 1 succ term | 2 add term term | 3 mul term term | 4 var name
//! formula  0 eq t t | 1 le t t | 2 not f | 3 and f f | 4 or f f | 5 implies f f
//!          6 forall name f | 7 exists name f
//!          8 bounded-forall name t f | 9 bounded-exists name t f
//! proof    u16 step-count, steps
//! step     rule-tag rule-fields formula
//! rule     0 pa u8 | 1 induction | 2 equality | 3 logical u8 [term if exists-intro]
//!          4 mp u16 u16 | 5 gen u16 | 6 inst u16 term | 7 eval | 8 premise
//! ```
//!
//! Decoding rejects trailing bytes, so each proof has exactly one encoding.

use crate::logic::{Formula, Ident, Term};
use crate::wire::{self, DecodeError, Reader};

use super::{LogicalScheme, Proof, ProofStep, Rule, RuleTag};

/// Deepest formula or term nesting accepted by the decoder (numeral
/// successor chains do not count).
pub const MAX_NESTING: usize = 8192;

pub fn encode_term(out: &mut Vec<u8>, t: &Term) {
    let mut cur = t;
    while let Term::Succ(inner) = cur {
        out.push(1);
        cur = inner;
    }
    match cur {
        Term::Zero => out.push(0),
        Term::Succ(_) => unreachable!(),
        Term::Add(a, b) => {
            out.push(2);
            encode_term(out, a);
            encode_term(out, b);
        }
        Term::Mul(a, b) => {
            out.push(3);
            encode_term(out, a);
            encode_term(out, b);
        }
        Term::Var(x) => {
            out.push(4);
            wire::put_str(out, x.as_str());
        }
    }
}

fn decode_ident(r: &mut Reader<'_>) -> Result<Ident, DecodeError> {
    let s = wire::get_str(r)?;
    Ident::new(s).map_err(|_| r.error(format!("invalid identifier `{s}`")))
}

pub(crate) fn decode_term(r: &mut Reader<'_>, depth: usize) -> Result<Term, DecodeError> {
    if depth > MAX_NESTING {
        return Err(r.error("nesting too deep"));
    }
    let mut succs = 0usize;
    let base = loop {
        match r.u8()? {
            0 => break Term::Zero,
            1 => succs += 1,
            2 => break Term::add(decode_term(r, depth + 1)?, decode_term(r, depth + 1)?),
            3 => break Term::mul(decode_term(r, depth + 1)?, decode_term(r, depth + 1)?),
            4 => break Term::Var(decode_ident(r)?),
            tag => return Err(r.error(format!("bad term tag {tag}"))),
        }
    };
    Ok((0..succs).fold(base, |t, _| Term::succ(t)))
}

pub fn encode_formula(out: &mut Vec<u8>, f: &Formula) {
    crate::logic::deep(|| encode_formula_inner(out, f))
}

fn encode_formula_inner(out: &mut Vec<u8>, f: &Formula) {
    match f {
        Formula::Eq(a, b) | Formula::Le(a, b) => {
            out.push(if matches!(f, Formula::Eq(..)) { 0 } else { 1 });
            encode_term(out, a);
            encode_term(out, b);
        }
        Formula::Not(g) => {
            out.push(2);
            encode_formula(out, g);
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            out.push(match f {
                Formula::And(..) => 3,
                Formula::Or(..) => 4,
                _ => 5,
            });
            encode_formula(out, a);
            encode_formula(out, b);
        }
        Formula::ForAll(x, g) | Formula::Exists(x, g) => {
            out.push(if matches!(f, Formula::ForAll(..)) { 6 } else { 7 });
            wire::put_str(out, x.as_str());
            encode_formula(out, g);
        }
        Formula::BoundedForAll(x, t, g) | Formula::BoundedExists(x, t, g) => {
            out.push(if matches!(f, Formula::BoundedForAll(..)) { 8 } else { 9 });
            wire::put_str(out, x.as_str());
            encode_term(out, t);
            encode_formula(out, g);
        }
    }
}

pub(crate) fn read_formula(r: &mut Reader<'_>, depth: usize) -> Result<Formula, DecodeError> {
    crate::logic::deep(|| read_formula_inner(r, depth))
}

fn read_formula_inner(r: &mut Reader<'_>, depth: usize) -> Result<Formula, DecodeError> {
    if depth > MAX_NESTING {
        return Err(r.error("nesting too deep"));
    }
    let d = depth + 1;
    Ok(match r.u8()? {
        0 => Formula::eq(decode_term(r, d)?, decode_term(r, d)?),
        1 => Formula::le(decode_term(r, d)?, decode_term(r, d)?),
        2 => Formula::not(read_formula(r, d)?),
        3 => Formula::and(read_formula(r, d)?, read_formula(r, d)?),
        4 => Formula::or(read_formula(r, d)?, read_formula(r, d)?),
        5 => Formula::implies(read_formula(r, d)?, read_formula(r, d)?),
        6 => {
            let x = decode_ident(r)?;
            Formula::forall(&x, read_formula(r, d)?)
        }
        7 => {
            let x = decode_ident(r)?;
            Formula::exists(&x, read_formula(r, d)?)
        }
        tag @ (8 | 9) => {
            let x = decode_ident(r)?;
            let bound = decode_term(r, d)?;
            if bound.occurs(&x) {
                return Err(r.error(format!("bound of `{x}` mentions `{x}`")));
            }
            let body = read_formula(r, d)?;
            if tag == 8 {
                Formula::bounded_forall(&x, bound, body)
            } else {
                Formula::bounded_exists(&x, bound, body)
            }
        }
        tag => return Err(r.error(format!("bad formula tag {tag}"))),
    })
}

/// Decodes a formula that must occupy all of `bytes`.
pub fn decode_formula(bytes: &[u8]) -> Result<Formula, DecodeError> {
    let mut r = Reader::new(bytes);
    let f = read_formula(&mut r, 0)?;
    r.finish()?;
    Ok(f)
}

fn put_index(out: &mut Vec<u8>, i: usize) {
    wire::put_u16(out, u16::try_from(i).expect("step number exceeds u16"));
}

pub(crate) fn encode_step(out: &mut Vec<u8>, step: &ProofStep) {
    out.push(step.rule.tag() as u8);
    match &step.rule {
        Rule::PaAxiom(i) => out.push(*i),
        Rule::Logical(s) => {
            out.push(s.id());
            if let LogicalScheme::ExistsIntro(t) = s {
                encode_term(out, t);
            }
        }
        Rule::ModusPonens { minor, major } => {
            put_index(out, *minor);
            put_index(out, *major);
        }
        Rule::Generalization { premise } => put_index(out, *premise),
        Rule::Instantiation { premise, term } => {
            put_index(out, *premise);
            encode_term(out, term);
        }
        Rule::Induction | Rule::Equality | Rule::EvalTrue | Rule::Premise => {}
    }
    encode_formula(out, &step.conclusion);
}

/// Reads the rule fields and conclusion of a finitary step whose tag
/// byte has already been consumed.
pub(crate) fn decode_step_after_tag(r: &mut Reader<'_>, tag: u8) -> Result<ProofStep, DecodeError> {
    let rule = match tag {
        t if t == RuleTag::PaAxiom as u8 => Rule::PaAxiom(r.u8()?),
        t if t == RuleTag::Induction as u8 => Rule::Induction,
        t if t == RuleTag::Equality as u8 => Rule::Equality,
        t if t == RuleTag::Logical as u8 => {
            let id = r.u8()?;
            let witness = if id == 10 { Some(decode_term(r, 0)?) } else { None };
            Rule::Logical(
                LogicalScheme::from_id(id, witness)
                    .ok_or_else(|| r.error(format!("bad scheme id {id}")))?,
            )
        }
        t if t == RuleTag::ModusPonens as u8 => Rule::ModusPonens {
            minor: r.u16()? as usize,
            major: r.u16()? as usize,
        },
        t if t == RuleTag::Generalization as u8 => Rule::Generalization { premise: r.u16()? as usize },
        t if t == RuleTag::Instantiation as u8 => {
            let premise = r.u16()? as usize;
            Rule::Instantiation { premise, term: decode_term(r, 0)? }
        }
        t if t == RuleTag::EvalTrue as u8 => Rule::EvalTrue,
        t if t == RuleTag::Premise as u8 => Rule::Premise,
        t => return Err(r.error(format!("bad rule tag {t}"))),
    };
    let conclusion = read_formula(r, 0)?;
    Ok(ProofStep { conclusion, rule })
}

pub fn serialize_proof(p: &Proof) -> Vec<u8> {
    let mut out = Vec::new();
    put_index(&mut out, p.steps().len());
    for s in p.steps() {
        encode_step(&mut out, s);
    }
    out
}

pub fn deserialize_proof(bytes: &[u8]) -> Result<Proof, DecodeError> {
    let mut r = Reader::new(bytes);
    let count = r.u16()?;
    if count == 0 {
        return Err(r.error("proof has no steps"));
    }
    let mut steps = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let tag = r.u8()?;
        steps.push(decode_step_after_tag(&mut r, tag)?);
    }
    r.finish()?;
    Ok(Proof::new(steps).expect("non-empty"))
}
