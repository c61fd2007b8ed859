use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::machines::{Config, MachineDesc};

use super::{check_horizon, EncodingOverflow, DEFAULT_HORIZON};

/// Coding of configurations as natural numbers.
///
/// A configuration whose head and non-blank cells lie within `radius` of
/// cell 0 is written as base-`base` digits, least significant first:
/// the state, the head position plus `radius`, then the cells from
/// `-radius` to `radius`. The step count multiplies the whole block. The
/// base exceeds both `symbols * states` and `2 * radius + 1`, so every
/// digit fits and the map is injective.
#[derive(Clone, Debug)]
pub struct TraceEncoding {
    machine: MachineDesc,
    horizon: u64,
    base: u64,
}

impl TraceEncoding {
    /// An encoding whose window covers every configuration reachable in
    /// `horizon` steps.
    pub fn new(machine: MachineDesc, horizon: u64) -> Result<Self, EncodingOverflow> {
        check_horizon(horizon)?;
        let product = (machine.symbols().len() * machine.states().len()) as u64;
        let base = product.max(2 * horizon + 1) + 1;
        Ok(TraceEncoding { machine, horizon, base })
    }

    pub fn with_default_horizon(machine: MachineDesc) -> Self {
        Self::new(machine, DEFAULT_HORIZON).expect("default horizon fits")
    }

    pub fn machine(&self) -> &MachineDesc {
        &self.machine
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// Cells `-radius..=radius` are representable.
    pub fn radius(&self) -> u64 {
        self.horizon
    }

    fn block_len(&self) -> u32 {
        2 * self.radius() as u32 + 3
    }

    pub fn encode(&self, c: &Config) -> Result<BigUint, EncodingOverflow> {
        let r = self.radius() as i64;
        let overflow = EncodingOverflow::Window { radius: self.radius() };
        if c.head.abs() > r || c.tape.keys().any(|k| k.abs() > r) {
            return Err(overflow);
        }
        let base = BigUint::from(self.base);
        let mut digits = vec![c.state as u64, (c.head + r) as u64];
        digits.extend((-r..=r).map(|pos| c.tape.get(&pos).map_or(self.machine.blank(), |s| *s) as u64));
        let block = digits
            .iter()
            .rev()
            .fold(BigUint::from(0u8), |acc, d| acc * &base + BigUint::from(*d));
        Ok(BigUint::from(c.step_count) * base.pow(self.block_len()) + block)
    }

    /// Inverse of [`encode`](Self::encode); `None` if `code` is not the
    /// code of any configuration.
    pub fn decode(&self, code: &BigUint) -> Option<Config> {
        let base = BigUint::from(self.base);
        let scale = base.pow(self.block_len());
        let step_count = u64::try_from(code / &scale).ok()?;
        let mut block = code % &scale;
        let mut digits = Vec::with_capacity(self.block_len() as usize);
        for _ in 0..self.block_len() {
            let d = &block % &base;
            digits.push(u64::try_from(d).ok()?);
            block /= &base;
        }
        let r = self.radius() as i64;
        let state = digits[0];
        if state >= self.machine.states().len() as u64 || digits[1] > 2 * r as u64 {
            return None;
        }
        let mut tape = BTreeMap::new();
        for (pos, d) in (-r..=r).zip(&digits[2..]) {
            if *d >= self.machine.symbols().len() as u64 {
                return None;
            }
            if *d != self.machine.blank() as u64 {
                tape.insert(pos, *d as u16);
            }
        }
        Some(Config { state: state as u16, tape, head: digits[1] as i64 - r, step_count })
    }
}
