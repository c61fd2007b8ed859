//! Single-tape machines that halt with `yes`, halt with `no`, or run
//! forever, plus a budgeted simulator and the named corpus.

mod corpus;
mod text;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::wire::{self, DecodeError, Reader};

pub use corpus::{corpus, corpus_machine, corpus_source, CORPUS_NAMES};
pub use text::MachineParseError;

pub type StateId = u16;
pub type SymbolId = u16;

/// Name of the symbol used for unary input.
pub const STROKE: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    L,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Transition {
    pub next: StateId,
    pub write: SymbolId,
    pub mv: Move,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Yes,
    No,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Yes => "yes",
            Outcome::No => "no",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MachineError {
    #[error("accepting state `{0}` has an outgoing transition")]
    AcceptHasTransition(String),
    #[error("the yes and no states must differ")]
    SameAcceptStates,
    #[error("state id {0} out of range")]
    BadState(StateId),
    #[error("symbol id {0} out of range")]
    BadSymbol(SymbolId),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("invalid name `{0}`")]
    BadName(String),
    #[error("alphabet has no `{STROKE}` symbol")]
    NoStroke,
    #[error("blank and stroke symbols must differ")]
    BlankIsStroke,
}

/// A deterministic single-tape machine with two accepting states.
///
/// States and symbols are numbered by their position in `states` and
/// `symbols`; those orders are part of the machine's identity because
/// the arithmetization numbers them the same way.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MachineDesc {
    states: Vec<String>,
    symbols: Vec<String>,
    blank: SymbolId,
    stroke: SymbolId,
    start: StateId,
    yes: StateId,
    no: StateId,
    transitions: BTreeMap<(StateId, SymbolId), Transition>,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && s.len() <= 64
        && s.chars().all(|c| c.is_ascii_graphic() && c != ':' && c != '#')
        && s != "->"
}

impl MachineDesc {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        states: Vec<String>,
        symbols: Vec<String>,
        blank: SymbolId,
        start: StateId,
        yes: StateId,
        no: StateId,
        transitions: BTreeMap<(StateId, SymbolId), Transition>,
    ) -> Result<Self, MachineError> {
        for names in [&states, &symbols] {
            for (i, n) in names.iter().enumerate() {
                if !valid_name(n) {
                    return Err(MachineError::BadName(n.clone()));
                }
                if names[..i].contains(n) {
                    return Err(MachineError::DuplicateName(n.clone()));
                }
            }
        }
        let ns = states.len();
        let nsym = symbols.len();
        if ns > StateId::MAX as usize || nsym > SymbolId::MAX as usize {
            return Err(MachineError::BadState(StateId::MAX));
        }
        for q in [start, yes, no] {
            if q as usize >= ns {
                return Err(MachineError::BadState(q));
            }
        }
        if blank as usize >= nsym {
            return Err(MachineError::BadSymbol(blank));
        }
        let stroke = symbols
            .iter()
            .position(|s| s == STROKE)
            .ok_or(MachineError::NoStroke)? as SymbolId;
        if stroke == blank {
            return Err(MachineError::BlankIsStroke);
        }
        if yes == no {
            return Err(MachineError::SameAcceptStates);
        }
        for (&(q, a), tr) in &transitions {
            for s in [q, tr.next] {
                if s as usize >= ns {
                    return Err(MachineError::BadState(s));
                }
            }
            for s in [a, tr.write] {
                if s as usize >= nsym {
                    return Err(MachineError::BadSymbol(s));
                }
            }
            if q == yes || q == no {
                return Err(MachineError::AcceptHasTransition(states[q as usize].clone()));
            }
        }
        Ok(MachineDesc { states, symbols, blank, stroke, start, yes, no, transitions })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn blank(&self) -> SymbolId {
        self.blank
    }

    pub fn stroke(&self) -> SymbolId {
        self.stroke
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn accept(&self, outcome: Outcome) -> StateId {
        match outcome {
            Outcome::Yes => self.yes,
            Outcome::No => self.no,
        }
    }

    pub fn transitions(&self) -> &BTreeMap<(StateId, SymbolId), Transition> {
        &self.transitions
    }

    pub fn transition(&self, q: StateId, a: SymbolId) -> Option<&Transition> {
        self.transitions.get(&(q, a))
    }

    pub fn outcome_of(&self, q: StateId) -> Option<Outcome> {
        if q == self.yes {
            Some(Outcome::Yes)
        } else if q == self.no {
            Some(Outcome::No)
        } else {
            None
        }
    }

    pub fn parse(text: &str) -> Result<Self, MachineParseError> {
        text::parse(text)
    }

    /// Canonical text form; `parse` inverts it exactly.
    pub fn to_text(&self) -> String {
        text::print(self)
    }

    pub fn encode(&self, out: &mut Vec<u8>) {
        for names in [&self.states, &self.symbols] {
            wire::put_u16(out, names.len() as u16);
            for n in names {
                wire::put_str(out, n);
            }
        }
        for v in [self.blank, self.start, self.yes, self.no] {
            wire::put_u16(out, v);
        }
        wire::put_u16(out, self.transitions.len() as u16);
        for (&(q, a), tr) in &self.transitions {
            for v in [q, a, tr.next, tr.write] {
                wire::put_u16(out, v);
            }
            out.push(match tr.mv {
                Move::L => 0,
                Move::R => 1,
            });
        }
    }

    pub(crate) fn decode(r: &mut Reader<'_>) -> Result<Self, DecodeError> {
        let mut lists = Vec::new();
        for _ in 0..2 {
            let n = r.u16()?;
            let mut names = Vec::with_capacity(n as usize);
            for _ in 0..n {
                names.push(wire::get_str(r)?.to_string());
            }
            lists.push(names);
        }
        let symbols = lists.pop().unwrap_or_default();
        let states = lists.pop().unwrap_or_default();
        let blank = r.u16()?;
        let start = r.u16()?;
        let yes = r.u16()?;
        let no = r.u16()?;
        let count = r.u16()?;
        let mut transitions = BTreeMap::new();
        let mut last = None;
        for _ in 0..count {
            let q = r.u16()?;
            let a = r.u16()?;
            let next = r.u16()?;
            let write = r.u16()?;
            let mv = match r.u8()? {
                0 => Move::L,
                1 => Move::R,
                b => return Err(r.error(format!("bad move byte {b}"))),
            };
            // canonical order: strictly increasing keys
            if last.is_some_and(|k| k >= (q, a)) {
                return Err(r.error("transitions out of order"));
            }
            last = Some((q, a));
            transitions.insert((q, a), Transition { next, write, mv });
        }
        MachineDesc::new(states, symbols, blank, start, yes, no, transitions)
            .map_err(|e| r.error(e.to_string()))
    }
}

/// A configuration: state, tape contents, head position and step count.
/// Cells absent from `tape` hold the blank symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Config {
    pub state: StateId,
    pub tape: BTreeMap<i64, SymbolId>,
    pub head: i64,
    pub step_count: u64,
}

impl Config {
    pub fn read(&self, m: &MachineDesc) -> SymbolId {
        self.tape.get(&self.head).copied().unwrap_or(m.blank)
    }

    fn write(&mut self, m: &MachineDesc, sym: SymbolId) {
        if sym == m.blank {
            self.tape.remove(&self.head);
        } else {
            self.tape.insert(self.head, sym);
        }
    }
}

/// Input `n` in unary: `n` strokes starting at cell 0, head on cell 0.
pub fn initial_config(m: &MachineDesc, n: u64) -> Config {
    Config {
        state: m.start,
        tape: (0..n as i64).map(|i| (i, m.stroke)).collect(),
        head: 0,
        step_count: 0,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Next(Config),
    Halted(Outcome),
}

/// No transition is defined for the current state and symbol, and the
/// state is not accepting. Such a machine is treated as running forever.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("no transition from state {state} on symbol {symbol}")]
pub struct StuckConfiguration {
    pub state: StateId,
    pub symbol: SymbolId,
}

/// One step: report the outcome if `c` is accepting, else apply the
/// transition for the scanned symbol.
pub fn step(m: &MachineDesc, c: &Config) -> Result<Step, StuckConfiguration> {
    if let Some(o) = m.outcome_of(c.state) {
        return Ok(Step::Halted(o));
    }
    let mut next = c.clone();
    advance(m, &mut next)?;
    Ok(Step::Next(next))
}

fn advance(m: &MachineDesc, c: &mut Config) -> Result<(), StuckConfiguration> {
    let symbol = c.read(m);
    let tr = *m
        .transition(c.state, symbol)
        .ok_or(StuckConfiguration { state: c.state, symbol })?;
    c.write(m, tr.write);
    c.state = tr.next;
    c.head += match tr.mv {
        Move::L => -1,
        Move::R => 1,
    };
    c.step_count += 1;
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RunOutcome {
    /// Halted with `yes`; the count includes the step that observed it.
    Yes(u64),
    No(u64),
    Timeout,
}

impl RunOutcome {
    pub fn outcome(&self) -> Option<Outcome> {
        match self {
            RunOutcome::Yes(_) => Some(Outcome::Yes),
            RunOutcome::No(_) => Some(Outcome::No),
            RunOutcome::Timeout => None,
        }
    }

    pub fn steps(&self) -> Option<u64> {
        match self {
            RunOutcome::Yes(s) | RunOutcome::No(s) => Some(*s),
            RunOutcome::Timeout => None,
        }
    }
}

/// Runs `m` on input `n` for at most `budget` steps.
pub fn run(m: &MachineDesc, n: u64, budget: u64) -> RunOutcome {
    let mut c = initial_config(m, n);
    for used in 1..=budget {
        if let Some(o) = m.outcome_of(c.state) {
            return match o {
                Outcome::Yes => RunOutcome::Yes(used),
                Outcome::No => RunOutcome::No(used),
            };
        }
        if advance(m, &mut c).is_err() {
            // stuck forever
            return RunOutcome::Timeout;
        }
    }
    RunOutcome::Timeout
}

/// The configurations `c_0, c_1, ...` visited within `budget` steps,
/// ending at the first accepting one, if any.
pub fn trace(m: &MachineDesc, n: u64, budget: u64) -> Vec<Config> {
    let mut c = initial_config(m, n);
    let mut out = vec![c.clone()];
    for _ in 1..budget {
        if m.outcome_of(c.state).is_some() || advance(m, &mut c).is_err() {
            break;
        }
        out.push(c.clone());
    }
    out
}
