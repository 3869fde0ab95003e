//! The single home of the site ↔ bit convention.
//!
//! A basis state of an `n`-qubit register is an index into the amplitude
//! vector. Site 0 occupies the **most significant** of the `n` used bits, so
//! for `n = 3` the index `0b100` is the state with site 0 in `|1⟩` and sites
//! 1, 2 in `|0⟩`.

/// Bit position of `site` inside an `n`-qubit basis index.
#[inline(always)]
pub fn bit_pos(site: usize, n: usize) -> usize {
    debug_assert!(site < n);
    n - 1 - site
}

/// Value (0 or 1) of `site` in basis index `idx`.
#[inline(always)]
pub fn bit_at(idx: usize, site: usize, n: usize) -> usize {
    (idx >> bit_pos(site, n)) & 1
}

/// Basis index with the bit of `site` flipped.
#[inline(always)]
pub fn flip(idx: usize, site: usize, n: usize) -> usize {
    idx ^ (1 << bit_pos(site, n))
}

/// Total dimension of the `n`-qubit Hilbert space.
#[inline(always)]
pub fn dim(n: usize) -> usize {
    1usize << n
}
