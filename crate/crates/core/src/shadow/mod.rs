//! Randomized Pauli measurement simulation and classical-shadow estimators.
//!
//! A measurement record is a pair `(P, b)`: per-site basis choices drawn
//! uniformly from {X, Y, Z} and the ±1 outcomes of measuring them. The
//! single-record reconstruction `⊗_i (1 + 3 b_i P_i)/2` averages to the state,
//! which makes simple products of record entries unbiased estimators for
//! Pauli expectation values, energies, and (via record pairs) subsystem
//! purity.

mod error;
mod estimate;
mod sample;
mod types;

pub use error::ShadowError;
pub use estimate::{estimate_energy, estimate_pauli, estimate_renyi2, snapshot_pauli_estimate};
pub use sample::{measure, sample_basis};
pub use types::{EstimateReport, MoMConfig, OutcomeString, PauliBasisString, ShadowRecord};
