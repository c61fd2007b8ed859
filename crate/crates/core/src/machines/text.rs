//! Plain-text machine tables.
//!
//! ```text
//! # comment
//! start: A
//! yes: Y
//! no: N
//! blank: _
//! states: A Y N B        (optional, fixes state numbering)
//! alphabet: _ 1          (optional, fixes symbol numbering)
//! A 1 -> B _ R
//! ```
//!
//! Without the optional headers, states are numbered start, yes, no,
//! then by first appearance; symbols blank, `1`, then by first appearance.

use std::collections::BTreeMap;
use std::fmt::Write;

use thiserror::Error;

use super::{MachineDesc, MachineError, Move, StateId, SymbolId, Transition, STROKE};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MachineParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}:` header")]
    MissingHeader(&'static str),
    #[error(transparent)]
    Invalid(#[from] MachineError),
}

fn syntax(line: usize, message: impl Into<String>) -> MachineParseError {
    MachineParseError::Syntax { line, message: message.into() }
}

struct Names {
    names: Vec<String>,
    fixed: bool,
}

impl Names {
    fn id(&mut self, name: &str, line: usize) -> Result<u16, MachineParseError> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Ok(i as u16);
        }
        if self.fixed {
            return Err(syntax(line, format!("`{name}` is not listed in the header")));
        }
        self.names.push(name.to_string());
        Ok((self.names.len() - 1) as u16)
    }
}

pub(super) fn parse(text: &str) -> Result<MachineDesc, MachineParseError> {
    let mut headers: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, value)) = line.split_once(':') {
            let key = key.trim();
            if !matches!(key, "start" | "yes" | "no" | "blank" | "states" | "alphabet") {
                return Err(syntax(line_no, format!("unknown header `{key}`")));
            }
            if headers.insert(key, (line_no, value.trim())).is_some() {
                return Err(syntax(line_no, format!("duplicate header `{key}`")));
            }
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            [q, a, "->", q2, b, mv] => {
                let mv = match *mv {
                    "L" => Move::L,
                    "R" => Move::R,
                    other => return Err(syntax(line_no, format!("move must be L or R, got `{other}`"))),
                };
                rows.push((line_no, *q, *a, *q2, *b, mv));
            }
            _ => return Err(syntax(line_no, "expected `state symbol -> state symbol L|R`")),
        }
    }

    let header = |key: &'static str| {
        headers
            .get(key)
            .map(|&(line, v)| (line, v))
            .ok_or(MachineParseError::MissingHeader(key))
    };
    let single = |key: &'static str| -> Result<(usize, &str), MachineParseError> {
        let (line, v) = header(key)?;
        if v.split_whitespace().count() != 1 {
            return Err(syntax(line, format!("`{key}:` takes exactly one name")));
        }
        Ok((line, v))
    };
    let (start_line, start) = single("start")?;
    let (yes_line, yes) = single("yes")?;
    let (no_line, no) = single("no")?;
    let (blank_line, blank) = single("blank")?;

    let mut states = match headers.get("states") {
        Some(&(_, v)) => Names { names: v.split_whitespace().map(String::from).collect(), fixed: true },
        None => Names { names: Vec::new(), fixed: false },
    };
    let mut symbols = match headers.get("alphabet") {
        Some(&(_, v)) => Names { names: v.split_whitespace().map(String::from).collect(), fixed: true },
        None => Names { names: Vec::new(), fixed: false },
    };

    let start_id = states.id(start, start_line)?;
    let yes_id = states.id(yes, yes_line)?;
    let no_id = states.id(no, no_line)?;
    let blank_id = symbols.id(blank, blank_line)?;
    if !symbols.fixed {
        symbols.id(STROKE, blank_line)?;
    }

    let mut transitions = BTreeMap::new();
    for (line, q, a, q2, b, mv) in rows {
        let key: (StateId, SymbolId) = (states.id(q, line)?, symbols.id(a, line)?);
        let tr = Transition { next: states.id(q2, line)?, write: symbols.id(b, line)?, mv };
        if transitions.insert(key, tr).is_some() {
            return Err(syntax(line, format!("second transition for `{q} {a}`")));
        }
    }
    Ok(MachineDesc::new(
        states.names,
        symbols.names,
        blank_id,
        start_id,
        yes_id,
        no_id,
        transitions,
    )?)
}

pub(super) fn print(m: &MachineDesc) -> String {
    let mut out = String::new();
    let st = |q: StateId| m.states[q as usize].as_str();
    let sy = |a: SymbolId| m.symbols[a as usize].as_str();
    let _ = writeln!(out, "start: {}", st(m.start));
    let _ = writeln!(out, "yes: {}", st(m.yes));
    let _ = writeln!(out, "no: {}", st(m.no));
    let _ = writeln!(out, "blank: {}", sy(m.blank));
    let _ = writeln!(out, "states: {}", m.states.join(" "));
    let _ = writeln!(out, "alphabet: {}", m.symbols.join(" "));
    for (&(q, a), tr) in &m.transitions {
        let mv = match tr.mv {
            Move::L => "L",
            Move::R => "R",
        };
        let _ = writeln!(out, "{} {} -> {} {} {}", st(q), sy(a), st(tr.next), sy(tr.write), mv);
    }
    out
}
