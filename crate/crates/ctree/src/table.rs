//! Keyed transition-vector tables and the system-state transitions.
//!
//! Each of the `2^k` payload values owns a 64-bit transition vector. Its low
//! R bits are the redundancy-matrix syndrome of the payload, so the check
//! `(state ^ symbol ^ vector) & r_m == 0` immediately catches the error
//! patterns the matrix detects. The upper `64 - R` bits are split into
//! k-bit segments, each an independent keyed permutation of the payload
//! values, so every segment is a bijection and every bit position splits the
//! payloads evenly.
//!
//! A forward transition XORs the vector into the state and shifts the state
//! right by R, re-inserting the R dropped low bits of the *previous* state
//! at the top; the R low bits of `state ^ vector` are what the encoder
//! transmits as redundancy. The backward transition is the exact algebraic
//! inverse, which is what lets bidirectional decoding merge on identical
//! 64-bit boundary states.

use crate::config::{CodeConfig, RedundancyMatrix};
use crate::error::Result;
use crate::rng::SplitMix64;

/// Symbol-indexed transition vectors for one code configuration.
#[derive(Debug, Clone)]
pub struct TransitionTable {
    entries: Vec<u64>,
    redundancy_mask: u64,
    symbol_bits: u32,
    payload_bits: u32,
    redundancy_bits: u32,
}

impl TransitionTable {
    /// Deterministically derives the table from `(n, k, R, table_seed)`.
    /// Identical configurations yield bit-identical tables, which is the
    /// encoder/decoder key agreement.
    pub fn generate(config: &CodeConfig) -> Result<Self> {
        config.validate()?;
        let matrix = RedundancyMatrix::build(config.redundancy_bits, config.payload_bits)?;
        Ok(Self::from_matrix(config, &matrix))
    }

    fn from_matrix(config: &CodeConfig, matrix: &RedundancyMatrix) -> Self {
        let k = config.payload_bits as u32;
        let r = config.redundancy_bits as u32;
        let payloads = 1usize << k;
        let full_segments = ((64 - r) / k) as usize;
        let leftover_bits = (64 - r) % k;
        let segment_count = full_segments + usize::from(leftover_bits > 0);

        let permutations: Vec<Vec<u32>> = (0..segment_count)
            .map(|j| {
                SplitMix64::substream(config.table_seed, j as u64 + 1).permutation(payloads)
            })
            .collect();

        let mut entries = Vec::with_capacity(payloads);
        for payload in 0..payloads {
            let mut vector = matrix.syndrome(payload as u16) as u64;
            for (j, permutation) in permutations.iter().take(full_segments).enumerate() {
                vector |= (permutation[payload] as u64) << (r + j as u32 * k);
            }
            if leftover_bits > 0 {
                let tail = permutations[full_segments][payload] as u64;
                vector |= (tail & ((1 << leftover_bits) - 1)) << (r + full_segments as u32 * k);
            }
            entries.push(vector);
        }

        TransitionTable {
            entries,
            redundancy_mask: config.redundancy_mask(),
            symbol_bits: config.symbol_bits as u32,
            payload_bits: k,
            redundancy_bits: r,
        }
    }

    /// Transition vector for a payload value (`t[x]`).
    #[inline]
    pub fn vector(&self, payload: u16) -> u64 {
        self.entries[payload as usize]
    }

    #[inline]
    pub fn redundancy_mask(&self) -> u64 {
        self.redundancy_mask
    }

    #[inline]
    pub fn redundancy_bits(&self) -> u32 {
        self.redundancy_bits
    }

    #[inline]
    pub fn payload_bits(&self) -> u32 {
        self.payload_bits
    }

    #[inline]
    pub fn symbol_bits(&self) -> u32 {
        self.symbol_bits
    }

    /// Advances the state across one received symbol. Returns the posterior
    /// state and the redundancy check: true means the symbol is consistent
    /// with the state (an allowed transition).
    #[inline]
    pub fn step_forward(&self, state: u64, symbol: u16) -> (u64, bool) {
        let r = self.redundancy_bits;
        let vector = self.entries[(symbol >> r) as usize];
        let check = (state ^ symbol as u64 ^ vector) & self.redundancy_mask == 0;
        let next = ((state ^ vector) >> r) | (state << (64 - r));
        (next, check)
    }

    /// Exact inverse of [`TransitionTable::step_forward`]: recovers the prior
    /// state and reports the same check the forward step would have.
    #[inline]
    pub fn step_backward(&self, state: u64, symbol: u16) -> (u64, bool) {
        let r = self.redundancy_bits;
        let vector = self.entries[(symbol >> r) as usize];
        let prev = state.rotate_left(r) ^ (vector & !self.redundancy_mask);
        let check = (prev ^ symbol as u64 ^ vector) & self.redundancy_mask == 0;
        (prev, check)
    }

    /// Modified symbol for forward correction lookup: XORing the prior
    /// state's low R bits into the symbol makes the allowed-correction
    /// condition state-independent.
    #[inline]
    pub fn modified_symbol_forward(&self, state: u64, symbol: u16) -> u16 {
        symbol ^ (state & self.redundancy_mask) as u16
    }

    /// Modified symbol for backward correction lookup, computed from the
    /// posterior state: its top R bits are the prior state's low R bits.
    #[inline]
    pub fn modified_symbol_backward(&self, state: u64, symbol: u16) -> u16 {
        symbol ^ (state >> (64 - self.redundancy_bits)) as u16
    }

    /// Redundancy the encoder emits when absorbing `payload` into `state`:
    /// the low R bits of `state ^ t[payload]`, i.e. exactly the bits the
    /// forward shift discards.
    #[inline]
    pub fn emitted_redundancy(&self, state: u64, payload: u16) -> u16 {
        ((state ^ self.entries[payload as usize]) & self.redundancy_mask) as u16
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn config(n: u8, r: u8, seed: u64) -> CodeConfig {
        CodeConfig::new(n, r, seed, 16, 0.05, 1 << 16).unwrap()
    }

    #[test]
    fn identical_configs_yield_identical_tables() {
        let c = config(8, 4, 0xDEAD_BEEF);
        let a = TransitionTable::generate(&c).unwrap();
        let b = TransitionTable::generate(&c).unwrap();
        assert_eq!(a.entries, b.entries);
    }

    #[test]
    fn low_bits_match_matrix_syndrome_for_every_payload() {
        for seed in [0u64, 42, 0xFFFF_FFFF_FFFF_FFFF] {
            let c = config(8, 4, seed);
            let table = TransitionTable::generate(&c).unwrap();
            let matrix = RedundancyMatrix::build(4, 4).unwrap();
            for x in 0u16..16 {
                assert_eq!(table.vector(x) & 15, matrix.syndrome(x) as u64, "seed {seed} x {x}");
            }
        }
    }

    #[test]
    fn every_full_segment_is_a_permutation() {
        for seed in [1u64, 7, 42] {
            let c = config(8, 4, seed);
            let table = TransitionTable::generate(&c).unwrap();
            for segment in 0..15 {
                let mut values: Vec<u64> = (0u16..16)
                    .map(|x| (table.vector(x) >> (4 + segment * 4)) & 15)
                    .collect();
                values.sort_unstable();
                assert_eq!(values, (0..16).collect::<Vec<u64>>(), "seed {seed} segment {segment}");
            }
        }
    }

    #[test]
    fn vectors_are_pairwise_distinct() {
        for (n, r) in [(8u8, 4u8), (8, 1), (8, 6), (9, 6)] {
            let c = config(n, r, 3);
            let table = TransitionTable::generate(&c).unwrap();
            let mut entries = table.entries.clone();
            entries.sort_unstable();
            entries.dedup();
            assert_eq!(entries.len(), 1 << (n - r));
        }
    }

    #[test]
    fn leftover_bits_are_balanced() {
        // n=9, R=6, k=3: 58 upper bits = 19 full segments + 1 leftover bit.
        let c = config(9, 6, 11);
        let table = TransitionTable::generate(&c).unwrap();
        for bit in 6..64 {
            let ones: u32 = (0u16..8).map(|x| ((table.vector(x) >> bit) & 1) as u32).sum();
            assert_eq!(ones, 4, "bit {bit}");
        }
    }

    #[test]
    fn matches_cross_language_golden_table_head() {
        // First four vectors for (n=8, R=4, seed=42), frozen from an
        // independent straight-line implementation of the construction.
        let c = config(8, 4, 42);
        let table = TransitionTable::generate(&c).unwrap();
        assert_eq!(table.vector(0), 0xb941_058e_3112_80c0);
        assert_eq!(table.vector(1), 0x38fc_90a2_95dc_f717);
        assert_eq!(table.vector(2), 0xc604_5efa_ab28_d17b);
        assert_eq!(table.vector(3), 0x0ad7_db71_4d45_be2c);
    }

    #[test]
    fn backward_inverts_forward_and_checks_agree() {
        let c = config(8, 4, 9);
        let table = TransitionTable::generate(&c).unwrap();
        let mut rng = SplitMix64::new(1234);
        for _ in 0..100_000 {
            let state = rng.next_u64();
            let symbol = (rng.next_u64() & 0xFF) as u16;
            let (next, check_fwd) = table.step_forward(state, symbol);
            let (prev, check_bwd) = table.step_backward(next, symbol);
            assert_eq!(prev, state);
            assert_eq!(check_fwd, check_bwd);
        }
    }

    #[test]
    fn next_state_ignores_symbol_redundancy_bits() {
        let c = config(8, 4, 21);
        let table = TransitionTable::generate(&c).unwrap();
        let mut rng = SplitMix64::new(77);
        for _ in 0..1000 {
            let state = rng.next_u64();
            let symbol = (rng.next_u64() & 0xFF) as u16;
            let flipped = symbol ^ 0b0101;
            let (next_a, _) = table.step_forward(state, symbol);
            let (next_b, _) = table.step_backward(state, symbol);
            assert_eq!(next_a, table.step_forward(state, flipped).0);
            assert_eq!(next_b, table.step_backward(state, flipped).0);
        }
    }

    #[test]
    fn crafted_redundancy_passes_check() {
        let c = config(8, 4, 5);
        let table = TransitionTable::generate(&c).unwrap();
        let mut rng = SplitMix64::new(8);
        for _ in 0..1000 {
            let state = rng.next_u64();
            let payload = (rng.next_u64() & 0xF) as u16;
            let symbol = (payload << 4) | table.emitted_redundancy(state, payload);
            let (_, check) = table.step_forward(state, symbol);
            assert!(check);
        }
    }

    #[test]
    fn forward_is_injective_on_sampled_states() {
        let c = config(8, 4, 13);
        let table = TransitionTable::generate(&c).unwrap();
        let mut rng = SplitMix64::new(2);
        let symbol = 0xA7u16;
        let mut outputs: Vec<u64> = (0..10_000)
            .map(|_| table.step_forward(rng.next_u64(), symbol).0)
            .collect();
        outputs.sort_unstable();
        outputs.dedup();
        assert_eq!(outputs.len(), 10_000);
    }
}
