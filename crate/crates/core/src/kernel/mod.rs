//! The finitary Hilbert-style calculus over the Peano axioms and its
//! decidable checker.
//!
//! A proof is a list of steps numbered from 1; each step names its rule
//! and may cite earlier steps by number.

mod axioms;
mod check;
pub(crate) mod codec;
mod shortlex;
pub(crate) mod text;

use std::fmt;

use thiserror::Error;

use crate::logic::{Formula, Term};

pub use axioms::{induction_axiom, pa_axioms};
pub use check::{check_proof, check_step, Verdict};
pub use codec::{
    decode_formula, deserialize_proof, encode_formula, serialize_proof, MAX_NESTING,
};
pub use shortlex::{proof_at_index, shortlex_index, shortlex_string, Alphabet};
pub use text::{parse_proof_text, print_proof_text, ProofTextError};

/// Propositional and quantifier axiom schemes. Each is checked by
/// matching the shape of the step's conclusion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LogicalScheme {
    /// `A -> (B -> A)`
    K,
    /// `(A -> (B -> C)) -> ((A -> B) -> (A -> C))`
    S,
    /// `(~A -> ~B) -> (B -> A)`
    Contraposition,
    /// `A -> (B -> A & B)`
    AndIntro,
    /// `A & B -> A`
    AndElimLeft,
    /// `A & B -> B`
    AndElimRight,
    /// `A -> A | B`
    OrIntroLeft,
    /// `B -> A | B`
    OrIntroRight,
    /// `(A -> C) -> ((B -> C) -> (A | B -> C))`
    OrElim,
    /// `~A -> (A -> B)`
    ExFalso,
    /// `A[t/x] -> exists x. A`
    ExistsIntro(Term),
    /// `(forall x. (A -> B)) -> ((exists x. A) -> B)`, `x` not free in `B`
    ExistsElim,
    /// `(forall x. (A -> B)) -> (A -> forall x. B)`, `x` not free in `A`
    ForallDist,
    /// `(forall x <= t. A) -> forall x. (x <= t -> A)`
    BoundedForallUnfold,
    /// `(forall x. (x <= t -> A)) -> forall x <= t. A`
    BoundedForallFold,
    /// `(exists x <= t. A) -> exists x. (x <= t & A)`
    BoundedExistsUnfold,
    /// `(exists x. (x <= t & A)) -> exists x <= t. A`
    BoundedExistsFold,
}

impl LogicalScheme {
    pub const NAMES: [&'static str; 17] = [
        "K",
        "S",
        "contraposition",
        "and-intro",
        "and-elim-left",
        "and-elim-right",
        "or-intro-left",
        "or-intro-right",
        "or-elim",
        "ex-falso",
        "exists-intro",
        "exists-elim",
        "forall-dist",
        "bounded-forall-unfold",
        "bounded-forall-fold",
        "bounded-exists-unfold",
        "bounded-exists-fold",
    ];

    pub fn id(&self) -> u8 {
        use LogicalScheme::*;
        match self {
            K => 0,
            S => 1,
            Contraposition => 2,
            AndIntro => 3,
            AndElimLeft => 4,
            AndElimRight => 5,
            OrIntroLeft => 6,
            OrIntroRight => 7,
            OrElim => 8,
            ExFalso => 9,
            ExistsIntro(_) => 10,
            ExistsElim => 11,
            ForallDist => 12,
            BoundedForallUnfold => 13,
            BoundedForallFold => 14,
            BoundedExistsUnfold => 15,
            BoundedExistsFold => 16,
        }
    }

    /// The scheme with this id; `ExistsIntro` takes its witness term.
    pub fn from_id(id: u8, witness: Option<Term>) -> Option<Self> {
        use LogicalScheme::*;
        Some(match (id, witness) {
            (10, Some(t)) => ExistsIntro(t),
            (10, None) | (_, Some(_)) => return None,
            (0, None) => K,
            (1, None) => S,
            (2, None) => Contraposition,
            (3, None) => AndIntro,
            (4, None) => AndElimLeft,
            (5, None) => AndElimRight,
            (6, None) => OrIntroLeft,
            (7, None) => OrIntroRight,
            (8, None) => OrElim,
            (9, None) => ExFalso,
            (11, None) => ExistsElim,
            (12, None) => ForallDist,
            (13, None) => BoundedForallUnfold,
            (14, None) => BoundedForallFold,
            (15, None) => BoundedExistsUnfold,
            (16, None) => BoundedExistsFold,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        Self::NAMES[self.id() as usize]
    }
}

/// Rule tags without payload, one byte each in the binary format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleTag {
    PaAxiom = 0,
    Induction = 1,
    Equality = 2,
    Logical = 3,
    ModusPonens = 4,
    Generalization = 5,
    Instantiation = 6,
    EvalTrue = 7,
    Premise = 8,
}

/// How a step's conclusion is justified. Premise references are step
/// numbers (1-based) of earlier steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// The axiom at this index of [`pa_axioms`].
    PaAxiom(u8),
    /// An instance of the induction schema; the formula and variable are
    /// read off the conclusion.
    Induction,
    /// An instance of one of the equality schemes.
    Equality,
    Logical(LogicalScheme),
    /// From `A` (minor) and `A -> B` (major) infer `B`.
    ModusPonens { minor: usize, major: usize },
    /// From `A` infer `forall x. A` when `x` is free in no premise of Γ.
    Generalization { premise: usize },
    /// From `forall x. A` infer `A[t/x]`.
    Instantiation { premise: usize, term: Term },
    /// A closed bounded sentence that is true in the standard model.
    EvalTrue,
    /// A member of Γ.
    Premise,
}

impl Rule {
    pub fn tag(&self) -> RuleTag {
        match self {
            Rule::PaAxiom(_) => RuleTag::PaAxiom,
            Rule::Induction => RuleTag::Induction,
            Rule::Equality => RuleTag::Equality,
            Rule::Logical(_) => RuleTag::Logical,
            Rule::ModusPonens { .. } => RuleTag::ModusPonens,
            Rule::Generalization { .. } => RuleTag::Generalization,
            Rule::Instantiation { .. } => RuleTag::Instantiation,
            Rule::EvalTrue => RuleTag::EvalTrue,
            Rule::Premise => RuleTag::Premise,
        }
    }

    pub fn premises(&self) -> Vec<usize> {
        match self {
            Rule::ModusPonens { minor, major } => vec![*minor, *major],
            Rule::Generalization { premise } | Rule::Instantiation { premise, .. } => vec![*premise],
            _ => Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProofStep {
    pub conclusion: Formula,
    pub rule: Rule,
}

impl ProofStep {
    pub fn new(conclusion: Formula, rule: Rule) -> Self {
        ProofStep { conclusion, rule }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("a proof needs at least one step")]
pub struct EmptyProof;

/// A non-empty list of steps; the proof's target is the conclusion of
/// its last step.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Proof {
    steps: Vec<ProofStep>,
}

impl Proof {
    pub fn new(steps: Vec<ProofStep>) -> Result<Self, EmptyProof> {
        if steps.is_empty() {
            Err(EmptyProof)
        } else {
            Ok(Proof { steps })
        }
    }

    pub fn steps(&self) -> &[ProofStep] {
        &self.steps
    }

    pub fn target(&self) -> &Formula {
        &self.steps[self.steps.len() - 1].conclusion
    }

    pub fn into_steps(self) -> Vec<ProofStep> {
        self.steps
    }
}

/// Machine-readable reason attached to a rejection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RejectReason {
    BadPremiseIndex,
    RuleMismatch,
    EvalFalse,
    TargetMismatch,
    NotInGamma,
    MalformedEncoding,
}

impl RejectReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            RejectReason::BadPremiseIndex => "bad-premise-index",
            RejectReason::RuleMismatch => "rule-mismatch",
            RejectReason::EvalFalse => "eval-false",
            RejectReason::TargetMismatch => "target-mismatch",
            RejectReason::NotInGamma => "not-in-gamma",
            RejectReason::MalformedEncoding => "malformed-encoding",
        }
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The first failing step (1-based; 0 when the proof could not be decoded
/// at all) and why it failed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rejection {
    pub step: usize,
    pub reason: RejectReason,
    pub detail: String,
}

impl Rejection {
    pub fn new(step: usize, reason: RejectReason, detail: impl Into<String>) -> Self {
        Rejection { step, reason, detail: detail.into() }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.step, self.reason)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}
