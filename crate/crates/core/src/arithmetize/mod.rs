//! Machine runs as arithmetic.
//!
//! The predicate "machine `m` on input `n` has halted with `outcome` by
//! step `t`" is written as a bounded formula over a fixed horizon `T`.
//! Step `i` of the run is described by digit variables: the state `q_i`,
//! the head position `h_i` (shifted by `T` so it stays non-negative), the
//! scanned symbol `r_i` and the written symbol `w_i`. The scanned symbol is
//! recovered from the most recent earlier write at the same position, or
//! from the initial tape if there is none. Every quantifier is bounded by
//! a numeral computed from the machine and the horizon, so evaluation by
//! enumeration follows the single path the run actually takes.
//!
//! Within the horizon the predicate agrees with the simulator exactly.
//! Beyond it the formula is false, which makes the Σ1 and Π1 sentences
//! built on top of it statements about the first `T` steps.

mod trace;

use thiserror::Error;

use crate::kernel::{LogicalScheme, Proof, ProofStep, Rule};
use crate::logic::{numeral, Formula, Ident, NumeralCache, Term};
use crate::machines::{MachineDesc, Move, Outcome};

pub use trace::TraceEncoding;

/// Horizon used by [`halts_yes_formula`], [`halts_no_formula`] and
/// [`loops_formula`].
pub const DEFAULT_HORIZON: u64 = 64;

/// Largest horizon the builders accept. Formula nesting grows linearly
/// with the horizon and every consumer walks formulas recursively.
pub const MAX_HORIZON: u64 = 256;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EncodingOverflow {
    #[error("horizon {requested} exceeds the supported maximum {max}")]
    Horizon { requested: u64, max: u64 },
    #[error("configuration does not fit the window of radius {radius}")]
    Window { radius: u64 },
}

fn check_horizon(h: u64) -> Result<(), EncodingOverflow> {
    if h > MAX_HORIZON {
        Err(EncodingOverflow::Horizon { requested: h, max: MAX_HORIZON })
    } else {
        Ok(())
    }
}

/// Name of the free time variable in [`halted_by_open`].
pub fn time_var() -> Ident {
    Ident::new("t").expect("valid identifier")
}

struct Vars {
    q: Vec<Term>,
    h: Vec<Term>,
    r: Vec<Ident>,
    w: Vec<Ident>,
    q_id: Vec<Ident>,
    h_id: Vec<Ident>,
}

fn ident(prefix: char, i: u64) -> Ident {
    Ident::new(&format!("{prefix}{i}")).expect("valid identifier")
}

struct Builder<'a> {
    m: &'a MachineDesc,
    n: u64,
    horizon: u64,
    nums: NumeralCache,
    vars: Vars,
}

impl<'a> Builder<'a> {
    fn new(m: &'a MachineDesc, n: u64, horizon: u64) -> Self {
        let mut nums = NumeralCache::new();
        let steps = horizon.max(1);
        let q_id: Vec<Ident> = (0..steps).map(|i| ident('q', i)).collect();
        let h_id: Vec<Ident> = (0..steps).map(|i| ident('h', i)).collect();
        let q = (0..steps as usize)
            .map(|i| if i == 0 { nums.get(m.start() as u64) } else { Term::var(&q_id[i]) })
            .collect();
        let h = (0..steps as usize)
            .map(|i| if i == 0 { nums.get(horizon) } else { Term::var(&h_id[i]) })
            .collect();
        let vars = Vars {
            q,
            h,
            r: (0..steps).map(|i| ident('r', i)).collect(),
            w: (0..steps).map(|i| ident('w', i)).collect(),
            q_id,
            h_id,
        };
        Builder { m, n, horizon, nums, vars }
    }

    fn num(&mut self, k: u64) -> Term {
        self.nums.get(k)
    }

    /// The symbol at shifted position `h` before anything was written.
    fn initial_symbol(&mut self, h: &Term, r: &Term) -> Formula {
        let stroke = self.num(self.m.stroke() as u64);
        let blank = self.num(self.m.blank() as u64);
        if self.n == 0 {
            return Formula::eq(r.clone(), blank);
        }
        let lo = self.num(self.horizon);
        let hi = self.num(self.horizon + self.n);
        Formula::ite(
            Formula::and(Formula::le(lo, h.clone()), Formula::le(Term::succ(h.clone()), hi)),
            Formula::eq(r.clone(), stroke),
            Formula::eq(r.clone(), blank),
        )
    }

    fn read(&mut self, i: usize) -> Formula {
        let r = Term::var(&self.vars.r[i]);
        let hi = self.vars.h[i].clone();
        let mut f = self.initial_symbol(&hi, &r);
        for j in 0..i {
            f = Formula::ite(
                Formula::eq(self.vars.h[j].clone(), hi.clone()),
                Formula::eq(r.clone(), Term::var(&self.vars.w[j])),
                f,
            );
        }
        f
    }

    fn rows(&self) -> Vec<(u64, u64, u64, u64, Move)> {
        self.m
            .transitions()
            .iter()
            .filter(|((q, _), _)| self.m.outcome_of(*q).is_none())
            .map(|(&(q, a), tr)| (q as u64, a as u64, tr.next as u64, tr.write as u64, tr.mv))
            .collect()
    }

    /// `q_i = s & r_i = a & extra`, one disjunct per transition row.
    fn by_rows(&mut self, i: usize, extra: impl Fn(&mut Self, u64, u64, Move) -> Formula) -> Formula {
        let r = Term::var(&self.vars.r[i]);
        let rows = self.rows();
        let parts = rows
            .into_iter()
            .map(|(s, a, next, write, mv)| {
                let qs = Formula::eq(self.vars.q[i].clone(), self.num(s));
                let ra = Formula::eq(r.clone(), self.num(a));
                let e = extra(self, next, write, mv);
                Formula::conj(vec![qs, ra, e])
            })
            .collect();
        Formula::disj(parts)
    }

    /// Open formula in `time`: accepted in `target` at some config `i`
    /// with `i + 1 <= time`.
    fn halted_by(&mut self, target: Outcome, time: &Term) -> Formula {
        let acc = self.num(self.m.accept(target) as u64);
        let steps = self.horizon.max(1) as usize;
        let sigma = self.m.symbols().len() as u64;
        let states = self.m.states().len() as u64;
        let last = steps - 1;
        let mut f = Formula::and(
            Formula::eq(self.vars.q[last].clone(), acc.clone()),
            Formula::le(self.num(steps as u64), time.clone()),
        );
        for i in (0..last).rev() {
            let next = i + 1;
            let hn = Term::var(&self.vars.h_id[next]);
            let hi = self.vars.h[i].clone();
            let th = self.by_rows(i, |_, _, _, mv| match mv {
                Move::R => Formula::eq(hn.clone(), Term::succ(hi.clone())),
                Move::L => Formula::eq(Term::succ(hn.clone()), hi.clone()),
            });
            let bound_h = self.num(2 * self.horizon);
            let inner = Formula::bounded_exists(&self.vars.h_id[next], bound_h, Formula::and(th, f));
            let w = Term::var(&self.vars.w[i]);
            let tw = self.by_rows(i, |b, _, write, _| Formula::eq(w.clone(), b.num(write)));
            let top_sym = self.num(sigma - 1);
            let inner = Formula::bounded_exists(&self.vars.w[i], top_sym.clone(), Formula::and(tw, inner));
            let qn = Term::var(&self.vars.q_id[next]);
            let tq = self.by_rows(i, |b, nxt, _, _| Formula::eq(qn.clone(), b.num(nxt)));
            let top_state = self.num(states - 1);
            let inner = Formula::bounded_exists(&self.vars.q_id[next], top_state, Formula::and(tq, inner));
            let read = self.read(i);
            let inner = Formula::bounded_exists(&self.vars.r[i], top_sym, Formula::and(read, inner));
            let here = Formula::and(
                Formula::eq(self.vars.q[i].clone(), acc.clone()),
                Formula::le(self.num(i as u64 + 1), time.clone()),
            );
            let later = Formula::and(Formula::le(self.num(i as u64 + 2), time.clone()), inner);
            f = Formula::or(here, later);
        }
        f
    }
}

/// The halting predicate with the time variable [`time_var`] free,
/// exact for runs of at most `horizon` steps.
pub fn halted_by_open(
    m: &MachineDesc,
    n: u64,
    outcome: Outcome,
    horizon: u64,
) -> Result<Formula, EncodingOverflow> {
    check_horizon(horizon)?;
    let t = Term::var(&time_var());
    Ok(Builder::new(m, n, horizon).halted_by(outcome, &t))
}

/// Closed bounded sentence, true iff `run(m, n, t)` ends in `outcome`.
/// Equal to [`halted_by_open`] at horizon `max(t, 1)` with `t` replaced
/// by its numeral.
pub fn halted_by_formula(
    m: &MachineDesc,
    n: u64,
    t: u64,
    outcome: Outcome,
) -> Result<Formula, EncodingOverflow> {
    let horizon = t.max(1);
    check_horizon(horizon)?;
    Ok(Builder::new(m, n, horizon).halted_by(outcome, &numeral(t)))
}

/// The instance of the open predicate at time `t`.
pub fn halted_by_instance(
    m: &MachineDesc,
    n: u64,
    outcome: Outcome,
    horizon: u64,
    t: u64,
) -> Result<Formula, EncodingOverflow> {
    check_horizon(horizon)?;
    Ok(Builder::new(m, n, horizon).halted_by(outcome, &numeral(t)))
}

pub fn halts_formula_with_horizon(
    m: &MachineDesc,
    n: u64,
    outcome: Outcome,
    horizon: u64,
) -> Result<Formula, EncodingOverflow> {
    Ok(Formula::exists(&time_var(), halted_by_open(m, n, outcome, horizon)?))
}

/// `exists t. halted_by(m, n, t, yes)`.
pub fn halts_yes_formula(m: &MachineDesc, n: u64) -> Formula {
    halts_formula_with_horizon(m, n, Outcome::Yes, DEFAULT_HORIZON).expect("default horizon fits")
}

/// `exists t. halted_by(m, n, t, no)`.
pub fn halts_no_formula(m: &MachineDesc, n: u64) -> Formula {
    halts_formula_with_horizon(m, n, Outcome::No, DEFAULT_HORIZON).expect("default horizon fits")
}

/// The body of the looping sentence: neither outcome by time `t`.
pub fn loops_body(m: &MachineDesc, n: u64, horizon: u64) -> Result<Formula, EncodingOverflow> {
    Ok(Formula::not(Formula::or(
        halted_by_open(m, n, Outcome::Yes, horizon)?,
        halted_by_open(m, n, Outcome::No, horizon)?,
    )))
}

/// [`loops_body`] with `t` replaced by its numeral.
pub fn loops_instance(
    m: &MachineDesc,
    n: u64,
    horizon: u64,
    t: u64,
) -> Result<Formula, EncodingOverflow> {
    Ok(Formula::not(Formula::or(
        halted_by_instance(m, n, Outcome::Yes, horizon, t)?,
        halted_by_instance(m, n, Outcome::No, horizon, t)?,
    )))
}

pub fn loops_formula_with_horizon(
    m: &MachineDesc,
    n: u64,
    horizon: u64,
) -> Result<Formula, EncodingOverflow> {
    Ok(Formula::forall(&time_var(), loops_body(m, n, horizon)?))
}

/// `forall t. ~(halted_by(m, n, t, yes) | halted_by(m, n, t, no))`.
pub fn loops_formula(m: &MachineDesc, n: u64) -> Formula {
    loops_formula_with_horizon(m, n, DEFAULT_HORIZON).expect("default horizon fits")
}

/// Three-step proof of `exists t. H(t)` from the instance `H(s)`:
/// evaluate the instance, introduce the quantifier, detach.
pub fn halting_witness_proof(
    m: &MachineDesc,
    n: u64,
    outcome: Outcome,
    horizon: u64,
    s: u64,
) -> Result<Proof, EncodingOverflow> {
    let instance = halted_by_instance(m, n, outcome, horizon, s)?;
    let sentence = halts_formula_with_horizon(m, n, outcome, horizon)?;
    let intro = Formula::implies(instance.clone(), sentence.clone());
    Ok(Proof::new(vec![
        ProofStep::new(instance, Rule::EvalTrue),
        ProofStep::new(intro, Rule::Logical(LogicalScheme::ExistsIntro(numeral(s)))),
        ProofStep::new(sentence, Rule::ModusPonens { minor: 1, major: 2 }),
    ])
    .expect("non-empty"))
}

#[cfg(test)]
mod tests;
