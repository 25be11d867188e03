//! Deterministic pseudo-random streams shared by encoder, decoder, and
//! simulation harness.
//!
//! Cross-implementation reproducibility requires one pinned generator, so
//! every consumer of randomness in this crate (transition-table segments,
//! the initial system state, channel noise, experiment payloads) draws from
//! the SplitMix64 recurrence:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15          (mod 2^64)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9    (mod 2^64)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB    (mod 2^64)
//! output = z ^ (z >> 31)
//! ```
//!
//! Independent substreams of a 64-bit master seed are obtained by seeding
//! the recurrence with `seed ^ index`. Substream 0 of the table seed is
//! reserved for the initial system state; substream `j + 1` drives
//! transition-vector segment `j`. The channel and harness derive per-frame
//! substreams the same way from their own seeds.

/// SplitMix64 stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Substream `index` of `seed`; see the module docs for the convention.
    pub fn substream(seed: u64, index: u64) -> Self {
        SplitMix64::new(seed ^ index)
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in [0, bound) without modulo bias: draws below
    /// `2^64 mod bound` are rejected so every residue is equally likely.
    pub fn bounded(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let threshold = bound.wrapping_neg() % bound; // 2^64 mod bound
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }

    /// Unbiased Fisher-Yates permutation of `0..len`.
    pub fn permutation(&mut self, len: usize) -> Vec<u32> {
        let mut items: Vec<u32> = (0..len as u32).collect();
        for i in (1..len).rev() {
            let j = self.bounded(i as u64 + 1) as usize;
            items.swap(i, j);
        }
        items
    }
}

/// One application of the SplitMix64 output mix to an arbitrary word.
/// Used as the hash for decoder state registries.
#[inline]
pub fn mix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
