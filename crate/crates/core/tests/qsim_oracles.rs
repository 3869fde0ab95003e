//! Independent oracles for the exact simulation backend.
//!
//! The chain at coupling `g` maps to free fermions; the even-parity
//! (antiperiodic) sector carries the ground state, giving a closed-form
//! energy that never touches the eigensolver. The cluster-state entropy
//! oracle is a GF(2) stabilizer-rank computation. Both are used to pin the
//! dense and iterative eigensolver paths.

use std::f64::consts::PI;

use shadowgen_core::qsim::{
    build_hamiltonian, expect_pauli, ground_space_auto, renyi2_exact, HamiltonianSpec, Pauli,
    PauliString,
};

/// Closed-form ground energy of `-Σ(1-g) Z Z - g Σ X` on a periodic chain:
/// `E0 = -Σ_m ε(k_m)/2` over antiperiodic momenta `k_m = (2m+1)π/N` with
/// `ε(k) = 2 √(J² + h² - 2 J h cos k)`, `J = 1-g`, `h = g`.
fn free_fermion_e0(g: f64, n: usize) -> f64 {
    let j = 1.0 - g;
    let h = g;
    -(0..n)
        .map(|m| {
            let k = (2 * m + 1) as f64 * PI / n as f64;
            (j * j + h * h - 2.0 * j * h * k.cos()).sqrt()
        })
        .sum::<f64>()
}

#[test]
fn tfim_ground_energy_matches_free_fermions_n10() {
    for &g in &[0.0, 0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9, 1.0] {
        let h = build_hamiltonian(&HamiltonianSpec::tfim(g, 10).unwrap()).unwrap();
        let gs = ground_space_auto(&h).unwrap();
        let oracle = free_fermion_e0(g, 10);
        assert!(
            (gs.energy - oracle).abs() < 1e-8,
            "g = {g}: eigensolver {} vs free fermions {}",
            gs.energy,
            oracle
        );
    }
}

#[test]
fn tfim_ground_energy_matches_free_fermions_smaller_chains() {
    for n in [4, 6, 8] {
        for &g in &[0.3, 0.5, 0.8] {
            let h = build_hamiltonian(&HamiltonianSpec::tfim(g, n).unwrap()).unwrap();
            let gs = ground_space_auto(&h).unwrap();
            assert!((gs.energy - free_fermion_e0(g, n)).abs() < 1e-8, "n={n} g={g}");
        }
    }
}

#[test]
fn kramers_wannier_duality_n10() {
    let n = 10;
    for &g in &[0.0, 0.2, 0.35, 0.5, 0.65, 0.8, 1.0] {
        let gs_g = ground_space_auto(
            &build_hamiltonian(&HamiltonianSpec::tfim(g, n).unwrap()).unwrap(),
        )
        .unwrap();
        let gs_dual = ground_space_auto(
            &build_hamiltonian(&HamiltonianSpec::tfim(1.0 - g, n).unwrap()).unwrap(),
        )
        .unwrap();
        for dist in [1usize, 2, 3, 5] {
            let zz = PauliString::two(0, Pauli::Z, dist, Pauli::Z).unwrap();
            let xs = PauliString::new((0..dist).map(|i| (i, Pauli::X))).unwrap();
            let order = expect_pauli(&gs_g, &zz).unwrap();
            let disorder = expect_pauli(&gs_dual, &xs).unwrap();
            assert!(
                (order - disorder).abs() < 1e-6,
                "g = {g}, n = {dist}: <ZZ>(g) = {order} vs X-string(1-g) = {disorder}"
            );
        }
    }
}

#[test]
fn cluster_triality_energy_invariance() {
    let n = 10;
    let base = [0.5, 0.3, 0.2];
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut energies = Vec::new();
    for p in perms {
        let params = [base[p[0]], base[p[1]], base[p[2]]];
        let h = build_hamiltonian(&HamiltonianSpec::cluster_ising(params, n).unwrap()).unwrap();
        energies.push(ground_space_auto(&h).unwrap().energy);
    }
    let min = energies.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = energies.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    assert!(max - min < 1e-9, "energies vary across permutations: {energies:?}");
}

/// Stabilizer-rank oracle for the cluster state: for a stabilizer state with
/// generators `K_i = Z_{i-1} X_i Z_{i+1}`, the Rényi-2 entropy of a region A
/// is `(|A| - dim G_A)·ln 2` where `G_A` is the subgroup supported inside A.
/// The subgroup dimension is the GF(2) kernel dimension of the
/// restriction-to-outside map.
fn cluster_state_renyi2_oracle(n: usize, region: &[usize]) -> f64 {
    // Row i: the support pattern of Π K_i^{a_i} outside the region, as X and
    // Z masks over the complement sites.
    let outside: Vec<usize> = (0..n).filter(|s| !region.contains(s)).collect();
    // Each generator contributes X at i, Z at i±1.
    // Build the map M: a (length n over GF(2)) -> restriction pattern, and
    // count the kernel dimension by Gaussian elimination on M^T columns.
    let mut rows: Vec<u128> = Vec::new(); // one row per generator, bits = outside-site (X,Z) pattern
    for i in 0..n {
        let mut pattern: u128 = 0;
        for (col, &site) in outside.iter().enumerate() {
            let x_here = site == i;
            let z_here = site == (i + 1) % n || site == (i + n - 1) % n;
            if x_here {
                pattern |= 1 << (2 * col);
            }
            if z_here {
                pattern |= 1 << (2 * col + 1);
            }
        }
        rows.push(pattern);
    }
    // kernel dim = n - rank(M)
    let mut rank = 0usize;
    let mut rows_work = rows;
    for bit in 0..(2 * outside.len()) {
        if let Some(pivot) = (rank..rows_work.len()).find(|&r| rows_work[r] >> bit & 1 == 1) {
            rows_work.swap(rank, pivot);
            for r in 0..rows_work.len() {
                if r != rank && rows_work[r] >> bit & 1 == 1 {
                    rows_work[r] ^= rows_work[rank];
                }
            }
            rank += 1;
        }
    }
    let kernel_dim = n - rank;
    (region.len() - kernel_dim) as f64 * std::f64::consts::LN_2
}

#[test]
fn cluster_state_renyi_matches_stabilizer_oracle() {
    let n = 10;
    let h = build_hamiltonian(&HamiltonianSpec::cluster_ising([0.0, 0.0, 1.0], n).unwrap())
        .unwrap();
    let gs = ground_space_auto(&h).unwrap();
    for region in [vec![0usize, 1, 2], vec![3, 4, 5], vec![0, 1], vec![2, 3, 4, 5]] {
        let exact = renyi2_exact(&gs, &region).unwrap();
        let oracle = cluster_state_renyi2_oracle(n, &region);
        assert!(
            (exact - oracle).abs() < 1e-9,
            "region {region:?}: partial trace {exact} vs stabilizer {oracle}"
        );
    }
    // Three contiguous sites cut two boundaries: 2 ln 2.
    let s3 = renyi2_exact(&gs, &[0, 1, 2]).unwrap();
    assert!((s3 - 2.0 * std::f64::consts::LN_2).abs() < 1e-9);
}
