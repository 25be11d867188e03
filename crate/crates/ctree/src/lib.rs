//! Correction-tree forward error correction.
//!
//! A convolutional-like code over a 64-bit system state: the encoder folds
//! each payload symbol into the state through a keyed transition table and
//! appends the R low state bits as redundancy. Because the state space is
//! astronomically larger than any practical search, decoding is best-first
//! search over a *correction tree* — candidate error patterns ranked by a
//! Fano-style log-probability weight — rather than trellis traversal.
//!
//! The crate is organized as:
//!
//! * [`config`] — code geometry, redundancy matrices, validation, presets.
//! * [`table`] — keyed transition-vector tables and the forward/backward
//!   state transitions (exact inverses of each other).
//! * [`frame`] — frame encoding and the bit-exact wire format.
//! * [`channel`] — seeded binary-symmetric and erasure channel simulation.
//! * [`decoder`] — unidirectional, bidirectional, and erasure-list decoders.
//! * [`theory`] — solvers for the asymptotic Pareto exponents and failure
//!   probability scaling.
//! * [`harness`] — Monte-Carlo experiment campaigns, ECDF and asymptote
//!   fitting, and report serialization.

pub mod channel;
pub mod config;
pub mod decoder;
pub mod error;
pub mod frame;
pub mod harness;
pub mod rng;
pub mod table;
pub mod theory;

pub use channel::{ChannelSpec, ErasureMask};
pub use config::{CodeConfig, RatePreset, RedundancyMatrix};
pub use decoder::{DecodeOutcome, DecodeStatus, Decoder};
pub use error::{Error, Result};
pub use frame::Frame;
pub use table::TransitionTable;
