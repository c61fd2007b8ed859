//! Proof search by dovetailing.
//!
//! Candidates are opened one per round and every open candidate gets one
//! oracle step per round, so a candidate on which the verifier runs
//! forever never blocks the ones after it. [`run_h`] interleaves three
//! such searches, one per possible answer to "does `m` halt on `n`".

mod h;
mod oracle;

use crate::kernel::{shortlex_string, Alphabet};
use crate::logic::Formula;

pub use h::{run_h, run_threads, HConfig, HOutcome, HProgress, Mode, ThreadProgress, ThreadReport};
pub use oracle::{KernelOracle, OracleRun, OracleState, VerifierOracle};

/// Limits for one search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_total_oracle_steps: u64,
    pub max_candidates: u64,
}

impl SearchBudget {
    /// Both limits are raised to at least 1.
    pub fn new(max_total_oracle_steps: u64, max_candidates: u64) -> Self {
        SearchBudget {
            max_total_oracle_steps: max_total_oracle_steps.max(1),
            max_candidates: max_candidates.max(1),
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(1_000_000, 100_000)
    }
}

/// Where candidate proofs come from.
#[derive(Clone, Debug)]
pub enum CandidateSource {
    /// Every byte string over the alphabet, in shortlex order.
    Shortlex(Alphabet),
    /// A finite list, in order.
    List(Vec<Vec<u8>>),
}

impl CandidateSource {
    fn get(&self, index: u128) -> Option<Vec<u8>> {
        match self {
            CandidateSource::Shortlex(a) => Some(shortlex_string(index, a)),
            CandidateSource::List(v) => usize::try_from(index).ok().and_then(|i| v.get(i).cloned()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Found {
    pub index: u128,
    pub bytes: Vec<u8>,
    pub oracle_steps: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchExhausted {
    pub rounds_completed: u64,
    pub candidates_opened: u64,
    pub oracle_steps: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Advance {
    Stepped,
    Found(Found),
    Exhausted(SearchExhausted),
}

struct Active<'o> {
    index: u128,
    bytes: Vec<u8>,
    run: Box<dyn OracleRun + 'o>,
}

/// A resumable triangular search; each [`advance_one`](Self::advance_one)
/// spends exactly one oracle step unless the search has ended.
pub struct Dovetailer<'o> {
    q: Formula,
    oracle: &'o dyn VerifierOracle,
    source: CandidateSource,
    budget: SearchBudget,
    active: Vec<Active<'o>>,
    cursor: usize,
    next_index: u128,
    source_done: bool,
    rounds_completed: u64,
    oracle_steps: u64,
    ended: Option<Advance>,
}

impl<'o> Dovetailer<'o> {
    pub fn new(q: Formula, oracle: &'o dyn VerifierOracle, source: CandidateSource, budget: SearchBudget) -> Self {
        Dovetailer {
            q,
            oracle,
            source,
            budget,
            active: Vec::new(),
            cursor: 0,
            next_index: 0,
            source_done: false,
            rounds_completed: 0,
            oracle_steps: 0,
            ended: None,
        }
    }

    pub fn oracle_steps(&self) -> u64 {
        self.oracle_steps
    }

    pub fn candidates_opened(&self) -> u64 {
        self.next_index as u64
    }

    pub fn rounds_completed(&self) -> u64 {
        self.rounds_completed
    }

    pub fn is_done(&self) -> bool {
        self.ended.is_some()
    }

    fn exhausted(&self) -> SearchExhausted {
        SearchExhausted {
            rounds_completed: self.rounds_completed,
            candidates_opened: self.candidates_opened(),
            oracle_steps: self.oracle_steps,
        }
    }

    fn open_next(&mut self) {
        if self.source_done || self.next_index as u64 >= self.budget.max_candidates {
            return;
        }
        match self.source.get(self.next_index) {
            Some(bytes) => {
                let run = self.oracle.start(&bytes, &self.q);
                self.active.push(Active { index: self.next_index, bytes, run });
                self.next_index += 1;
            }
            None => self.source_done = true,
        }
    }

    fn end(&mut self, a: Advance) -> Advance {
        self.ended = Some(a.clone());
        a
    }

    pub fn advance_one(&mut self) -> Advance {
        if let Some(a) = &self.ended {
            return a.clone();
        }
        if self.oracle_steps >= self.budget.max_total_oracle_steps {
            let e = self.exhausted();
            return self.end(Advance::Exhausted(e));
        }
        if self.cursor == 0 {
            self.open_next();
        }
        if self.active.is_empty() {
            let e = self.exhausted();
            return self.end(Advance::Exhausted(e));
        }
        self.oracle_steps += 1;
        let state = self.active[self.cursor].run.step();
        match state {
            OracleState::Yes => {
                let a = self.active.swap_remove(self.cursor);
                let found = Found { index: a.index, bytes: a.bytes, oracle_steps: self.oracle_steps };
                return self.end(Advance::Found(found));
            }
            OracleState::No => {
                self.active.remove(self.cursor);
            }
            OracleState::Running => self.cursor += 1,
        }
        if self.cursor >= self.active.len() {
            self.cursor = 0;
            self.rounds_completed += 1;
        }
        Advance::Stepped
    }

    /// Advances until the search ends.
    pub fn run(&mut self) -> Result<Found, SearchExhausted> {
        loop {
            match self.advance_one() {
                Advance::Stepped => {}
                Advance::Found(f) => return Ok(f),
                Advance::Exhausted(e) => return Err(e),
            }
        }
    }
}

/// Dovetailed search over all byte strings in shortlex order.
pub fn bfs_search(q: &Formula, oracle: &dyn VerifierOracle, budget: SearchBudget) -> Result<Found, SearchExhausted> {
    bfs_search_with(q, oracle, CandidateSource::Shortlex(Alphabet::full()), budget)
}

pub fn bfs_search_with(
    q: &Formula,
    oracle: &dyn VerifierOracle,
    source: CandidateSource,
    budget: SearchBudget,
) -> Result<Found, SearchExhausted> {
    Dovetailer::new(q.clone(), oracle, source, budget).run()
}
