//! Code geometry and GF(2) redundancy matrices.
//!
//! A code is described by `n` bits per encoded symbol, of which `k` carry
//! payload and `R = n - k` carry redundancy extracted from the system state.
//! The redundancy matrix defines which payload-bit parities feed the R
//! redundancy bits of every transition vector; it is what gives the check
//! its immediate error-detection power before the state evolution mixes
//! everything together.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Largest candidate count the redundancy-matrix search will enumerate.
const MATRIX_SEARCH_LIMIT: u128 = 2_000_000;

/// Code geometry plus the decoder-side knobs that both ends must agree on.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct CodeConfig {
    /// Bits per encoded symbol (2..=16).
    #[serde(rename = "n")]
    pub symbol_bits: u8,
    /// Payload bits per symbol; always `n - R`.
    #[serde(rename = "k")]
    pub payload_bits: u8,
    /// Redundancy bits per symbol (1..=n-2).
    #[serde(rename = "R")]
    pub redundancy_bits: u8,
    /// Keys the transition table and the initial system state.
    pub table_seed: u64,
    /// Symbols per frame.
    pub frame_length: u32,
    /// Bit-flip probability the decoder assumes when weighting corrections.
    pub assumed_epsilon: f64,
    /// Maximum state transitions a decode may spend.
    pub step_limit: u64,
}

impl CodeConfig {
    pub fn new(
        symbol_bits: u8,
        redundancy_bits: u8,
        table_seed: u64,
        frame_length: u32,
        assumed_epsilon: f64,
        step_limit: u64,
    ) -> Result<Self> {
        let config = CodeConfig {
            symbol_bits,
            payload_bits: symbol_bits.wrapping_sub(redundancy_bits),
            redundancy_bits,
            table_seed,
            frame_length,
            assumed_epsilon,
            step_limit,
        };
        config.validate()?;
        Ok(config)
    }

    /// Checks every invariant, naming the violated one in the error.
    pub fn validate(&self) -> Result<()> {
        let (n, k, r) = (self.symbol_bits, self.payload_bits, self.redundancy_bits);
        if !(2..=16).contains(&n) {
            return Err(Error::Config(format!("n must be in 2..=16, got {n}")));
        }
        if r < 1 || r > n.saturating_sub(2) {
            return Err(Error::Config(format!(
                "R must satisfy 1 <= R <= n-2, got R={r} with n={n}"
            )));
        }
        if k != n - r {
            return Err(Error::Config(format!(
                "k must equal n-R, got k={k} with n={n}, R={r}"
            )));
        }
        if !(1e-9..0.5).contains(&self.assumed_epsilon) {
            return Err(Error::Config(format!(
                "assumed_epsilon must be in [1e-9, 0.5), got {}",
                self.assumed_epsilon
            )));
        }
        if self.frame_length < 1 {
            return Err(Error::Config("frame_length must be >= 1".into()));
        }
        if self.frame_length > u16::MAX as u32 {
            return Err(Error::Config(format!(
                "frame_length must be <= {}, got {}",
                u16::MAX,
                self.frame_length
            )));
        }
        if self.step_limit < self.frame_length as u64 {
            return Err(Error::Config(format!(
                "step_limit must be >= frame_length, got {} < {}",
                self.step_limit, self.frame_length
            )));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let config: CodeConfig = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    /// Nominal code rate k/n, excluding final-state overhead.
    pub fn rate(&self) -> f64 {
        self.payload_bits as f64 / self.symbol_bits as f64
    }

    /// Rate after accounting for the 64-bit final state, protected at the
    /// same code rate: k·l / (n·l + 64·n/k).
    pub fn effective_rate(&self) -> f64 {
        let k = self.payload_bits as f64;
        let n = self.symbol_bits as f64;
        let l = self.frame_length as f64;
        k * l / (n * (l + 64.0 / k))
    }

    /// Low-R-bits extraction mask, `2^R - 1`.
    pub fn redundancy_mask(&self) -> u64 {
        (1u64 << self.redundancy_bits) - 1
    }

    /// The encoder/decoder starting state: the first nonzero output of
    /// substream 0 of the table seed.
    pub fn initial_state(&self) -> u64 {
        let mut rng = SplitMix64::substream(self.table_seed, 0);
        loop {
            let state = rng.next_u64();
            if state != 0 {
                return state;
            }
        }
    }
}

/// The code rates exercised throughout the experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatePreset {
    /// n=8, R=1.
    SevenEighths,
    /// n=8, R=4.
    Half,
    /// n=8, R=6.
    Quarter,
    /// n=9, R=6.
    Third,
}

impl RatePreset {
    pub fn geometry(self) -> (u8, u8) {
        match self {
            RatePreset::SevenEighths => (8, 1),
            RatePreset::Half => (8, 4),
            RatePreset::Quarter => (8, 6),
            RatePreset::Third => (9, 6),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "7/8" => Ok(RatePreset::SevenEighths),
            "1/2" => Ok(RatePreset::Half),
            "1/4" => Ok(RatePreset::Quarter),
            "1/3" => Ok(RatePreset::Third),
            other => Err(Error::Config(format!(
                "unknown rate preset {other:?}; expected one of 7/8, 1/2, 1/4, 1/3"
            ))),
        }
    }
}

/// R x k binary matrix; row `r` is the parity mask over payload bits that
/// produces redundancy bit `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedundancyMatrix {
    rows: Vec<u16>,
    payload_bits: u8,
}

impl RedundancyMatrix {
    /// Builds the matrix for a given geometry. The (R, k) pairs with a known
    /// best matrix are hardwired; anything else falls back to
    /// [`RedundancyMatrix::search`].
    pub fn build(redundancy_bits: u8, payload_bits: u8) -> Result<Self> {
        let n = redundancy_bits
            .checked_add(payload_bits)
            .filter(|&n| n <= 16)
            .ok_or_else(|| Error::Config("n = R + k must be <= 16".into()))?;
        if redundancy_bits < 1 || redundancy_bits > n - 2 {
            return Err(Error::Config(format!(
                "R must satisfy 1 <= R <= n-2, got R={redundancy_bits} with n={n}"
            )));
        }
        let rows: Option<Vec<u16>> = match (redundancy_bits, payload_bits) {
            (1, 7) => Some(vec![0b111_1111]),
            (4, 4) => Some(vec![0b0111, 0b1011, 0b1101, 0b1110]),
            (6, 2) => Some(vec![0b11, 0b11, 0b10, 0b10, 0b01, 0b01]),
            _ => None,
        };
        match rows {
            Some(rows) => Ok(RedundancyMatrix { rows, payload_bits }),
            None => RedundancyMatrix::search(redundancy_bits, payload_bits),
        }
    }

    /// Exhaustive search for the matrix whose per-weight detection counts
    /// are lexicographically maximal (all weight-1 patterns first, then
    /// weight-2, and so on). Columns are nonzero R-bit values, distinct
    /// whenever `k <= 2^R - 1` allows it.
    pub fn search(redundancy_bits: u8, payload_bits: u8) -> Result<Self> {
        let n = (redundancy_bits + payload_bits) as u32;
        let k = payload_bits as usize;
        let column_values: Vec<u16> = (1..(1u16 << redundancy_bits)).collect();
        let distinct = k <= column_values.len();

        let candidates = if distinct {
            binomial(column_values.len() as u128, k as u128)
        } else {
            binomial((column_values.len() + k - 1) as u128, k as u128)
        };
        if candidates > MATRIX_SEARCH_LIMIT {
            return Err(Error::Config(format!(
                "redundancy matrix search space for R={redundancy_bits}, k={payload_bits} \
                 has {candidates} candidates (limit {MATRIX_SEARCH_LIMIT})"
            )));
        }

        let mut best: Option<(Vec<u64>, Vec<u16>)> = None;
        let mut consider = |columns: &[u16]| {
            let rows = rows_from_columns(columns, redundancy_bits);
            let matrix = RedundancyMatrix {
                rows,
                payload_bits,
            };
            let counts: Vec<u64> = (1..=n)
                .map(|w| matrix.detection_coverage(n as u8, w as u8).0)
                .collect();
            match &best {
                Some((best_counts, _)) if *best_counts >= counts => {}
                _ => best = Some((counts, matrix.rows)),
            }
        };
        if distinct {
            for columns in column_values.iter().copied().combinations(k) {
                consider(&columns);
            }
        } else {
            for columns in column_values
                .iter()
                .copied()
                .combinations_with_replacement(k)
            {
                consider(&columns);
            }
        }

        let (_, rows) = best.expect("column candidates are never empty for R >= 1");
        Ok(RedundancyMatrix { rows, payload_bits })
    }

    pub fn rows(&self) -> &[u16] {
        &self.rows
    }

    pub fn redundancy_bits(&self) -> u8 {
        self.rows.len() as u8
    }

    pub fn payload_bits(&self) -> u8 {
        self.payload_bits
    }

    /// Matrix-vector product over GF(2): redundancy bit `r` is the parity
    /// of the payload bits selected by row `r`.
    #[inline]
    pub fn syndrome(&self, payload: u16) -> u16 {
        let mut out = 0u16;
        for (r, row) in self.rows.iter().enumerate() {
            out |= (((row & payload).count_ones() & 1) as u16) << r;
        }
        out
    }

    /// Over all n-bit error patterns of the given Hamming weight, how many
    /// the immediate redundancy check catches: a pattern `e` with payload
    /// part `e >> R` and redundancy part `e & (2^R-1)` is detected when the
    /// syndrome of its payload part differs from its redundancy part.
    pub fn detection_coverage(&self, symbol_bits: u8, weight: u8) -> (u64, u64) {
        assert!(weight <= symbol_bits, "weight must be <= n");
        let r = self.redundancy_bits();
        let mask = (1u16 << r) - 1;
        let mut detected = 0u64;
        let mut total = 0u64;
        for pattern in 0u32..(1u32 << symbol_bits) {
            if pattern.count_ones() != weight as u32 {
                continue;
            }
            total += 1;
            let pattern = pattern as u16;
            if self.syndrome(pattern >> r) != pattern & mask {
                detected += 1;
            }
        }
        (detected, total)
    }
}

fn rows_from_columns(columns: &[u16], redundancy_bits: u8) -> Vec<u16> {
    let mut rows = vec![0u16; redundancy_bits as usize];
    for (j, &column) in columns.iter().enumerate() {
        for (r, row) in rows.iter_mut().enumerate() {
            *row |= ((column >> r) & 1) << j;
        }
    }
    rows
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.saturating_mul(n - i) / (i + 1);
    }
    result
}
