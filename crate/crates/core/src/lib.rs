//! Proof checking for Peano Arithmetic with a bounded restricted ω-rule.

pub mod arithmetize;
pub mod dovetail;
pub mod logic;
pub mod kernel;
pub mod machines;
pub mod omega;
mod wire;

pub use wire::DecodeError;
