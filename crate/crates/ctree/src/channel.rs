//! Seeded noisy-channel simulation.
//!
//! Both channels are memoryless and bit-independent. Noise is drawn from a
//! dedicated SplitMix64 stream so a transmission is reproducible from its
//! seed, and per-frame substreams are derived as `noise_seed ^ (index + 1)`
//! so frames are independent but the whole campaign replays exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Which noise process corrupts the bits, with its parameter and seed.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChannelSpec {
    /// Binary symmetric channel: each bit flips with probability `epsilon`.
    Bsc { epsilon: f64, noise_seed: u64 },
    /// Erasure channel: each bit is lost with probability
    /// `erasure_probability`; lost positions are reported in the mask.
    Erasure {
        erasure_probability: f64,
        noise_seed: u64,
    },
}

/// Marks which bit positions of a frame were erased (true = erased).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErasureMask {
    bits: Vec<bool>,
}

impl ErasureMask {
    pub fn new(bits: Vec<bool>) -> Self {
        ErasureMask { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn erased_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

impl ChannelSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ChannelSpec::Bsc { epsilon, .. } => {
                if !(0.0..=0.5).contains(&epsilon) {
                    return Err(Error::Config(format!(
                        "BSC epsilon must be in [0, 0.5], got {epsilon}"
                    )));
                }
            }
            ChannelSpec::Erasure {
                erasure_probability,
                ..
            } => {
                if !(0.0..=1.0).contains(&erasure_probability) {
                    return Err(Error::Config(format!(
                        "erasure probability must be in [0, 1], got {erasure_probability}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn noise_seed(&self) -> u64 {
        match *self {
            ChannelSpec::Bsc { noise_seed, .. } | ChannelSpec::Erasure { noise_seed, .. } => {
                noise_seed
            }
        }
    }

    /// Same channel with the per-frame substream seed.
    pub fn for_frame(&self, frame_index: u64) -> ChannelSpec {
        let derived = self.noise_seed() ^ (frame_index + 1);
        match *self {
            ChannelSpec::Bsc { epsilon, .. } => ChannelSpec::Bsc {
                epsilon,
                noise_seed: derived,
            },
            ChannelSpec::Erasure {
                erasure_probability,
                ..
            } => ChannelSpec::Erasure {
                erasure_probability,
                noise_seed: derived,
            },
        }
    }

    /// Flips each bit independently with probability epsilon.
    pub fn bsc_transmit(&self, bits: &[bool]) -> Result<Vec<bool>> {
        self.validate()?;
        let ChannelSpec::Bsc {
            epsilon,
            noise_seed,
        } = *self
        else {
            return Err(Error::Input("bsc_transmit requires a BSC channel".into()));
        };
        let mut rng = SplitMix64::new(noise_seed);
        Ok(bits
            .iter()
            .map(|&bit| bit ^ (rng.next_f64() < epsilon))
            .collect())
    }

    /// Erases each bit independently: erased positions are zeroed in the
    /// output and flagged in the returned mask.
    pub fn erasure_transmit(&self, bits: &[bool]) -> Result<(Vec<bool>, ErasureMask)> {
        self.validate()?;
        let ChannelSpec::Erasure {
            erasure_probability,
            noise_seed,
        } = *self
        else {
            return Err(Error::Input(
                "erasure_transmit requires an erasure channel".into(),
            ));
        };
        let mut rng = SplitMix64::new(noise_seed);
        let mut mask = Vec::with_capacity(bits.len());
        let out = bits
            .iter()
            .map(|&bit| {
                let erased = rng.next_f64() < erasure_probability;
                mask.push(erased);
                bit && !erased
            })
            .collect();
        Ok((out, ErasureMask::new(mask)))
    }
}
