//! Shortlex enumeration of byte strings: shorter strings first, equal
//! lengths in lexicographic order. The enumeration is a bijection between
//! indices and strings over the alphabet.

/// A sorted set of distinct bytes to enumerate over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet(Vec<u8>);

impl Alphabet {
    pub fn full() -> Self {
        Alphabet((0..=255).collect())
    }

    /// Sorts and deduplicates; `None` if no bytes are given.
    pub fn new(bytes: &[u8]) -> Option<Self> {
        let mut v = bytes.to_vec();
        v.sort_unstable();
        v.dedup();
        (!v.is_empty()).then_some(Alphabet(v))
    }

    /// The bytes occurring in `sample`.
    pub fn of(sample: &[u8]) -> Option<Self> {
        Self::new(sample)
    }

    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The `index`-th string over `alphabet` in shortlex order.
pub fn shortlex_string(mut index: u128, alphabet: &Alphabet) -> Vec<u8> {
    let k = alphabet.len() as u128;
    let mut len = 0u32;
    let mut block: u128 = 1;
    while index >= block {
        index -= block;
        len += 1;
        block = match block.checked_mul(k) {
            Some(b) => b,
            None => break,
        };
    }
    let mut out = vec![alphabet.0[0]; len as usize];
    for slot in out.iter_mut().rev() {
        *slot = alphabet.0[(index % k) as usize];
        index /= k;
    }
    out
}

/// Position of `s` in the shortlex order over `alphabet`; `None` if `s`
/// uses a byte outside the alphabet or the index does not fit in `u128`.
pub fn shortlex_index(s: &[u8], alphabet: &Alphabet) -> Option<u128> {
    let k = alphabet.len() as u128;
    let mut shorter: u128 = 0;
    let mut block: u128 = 1;
    for _ in 0..s.len() {
        shorter = shorter.checked_add(block)?;
        block = block.checked_mul(k)?;
    }
    let mut rank: u128 = 0;
    for b in s {
        let digit = alphabet.0.binary_search(b).ok()? as u128;
        rank = rank.checked_mul(k)?.checked_add(digit)?;
    }
    shorter.checked_add(rank)
}

/// The `index`-th byte string over all 256 byte values.
pub fn proof_at_index(index: u128) -> Vec<u8> {
    shortlex_string(index, &Alphabet::full())
}
