//! Exact quantum simulation backend for the two spin-chain families.
//!
//! Builds Hamiltonians as weighted Pauli-string sums, finds (possibly
//! degenerate) ground spaces, and evaluates exact observables — Pauli
//! expectation values and Rényi-2 entanglement entropies — on the uniform
//! ground-space mixture. Serves both as the sampling substrate for
//! measurement simulation and as the oracle that predictions are judged
//! against.

mod eigen;
mod error;
mod hamiltonian;
mod observables;
mod types;

pub use eigen::{ground_space, ground_space_auto, DENSE_DIM_LIMIT, MAX_DIM};
pub use error::QsimError;
pub use hamiltonian::{build_hamiltonian, Hamiltonian};
pub use observables::{expect_pauli, renyi2_exact};
pub use types::{Family, GroundSpace, HamiltonianSpec, Pauli, PauliString, PureState};
