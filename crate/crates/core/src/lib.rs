//! Core library for generative modeling of randomized Pauli measurements on
//! spin-chain ground states.
//!
//! The crate is organized as a pipeline:
//!
//! - [`qsim`] — exact simulation backend: Hamiltonian construction, ground
//!   spaces, and exact observables (the oracle).
//! - [`shadow`] — randomized Pauli measurement sampling and classical-shadow
//!   estimators (energy, Pauli correlators, Rényi-2 entropy).
//! - [`dataset`] — tokenization of measurement records, training grids, and
//!   the on-disk dataset format.
//! - [`gpt`] — a decoder-only transformer over interleaved measurement
//!   tokens, with manual backpropagation, AdamW, and conditional sampling.
//! - [`pipeline`] — end-to-end prediction sweeps and comparison against the
//!   exact oracle.
//!
//! # Basis ordering convention
//!
//! Computational-basis states are indexed so that **site 0 is the most
//! significant bit** of the state index. Every module that touches state
//! vectors goes through the helpers in [`bits`]; no other code may assume an
//! endianness. See [`bits::bit_at`].

pub mod bits;
pub mod dataset;
pub mod gpt;
pub mod pipeline;
pub mod qsim;
pub mod rng;
pub mod shadow;
