use num_complex::Complex64;

use super::hamiltonian::pauli_action;
use super::types::{GroundSpace, PauliString, PureState};
use super::QsimError;
use crate::bits;

/// Largest subsystem for the exact Rényi-2 computation (reduced matrix 64×64).
pub const MAX_REGION: usize = 6;

const IMAG_TOL: f64 = 1e-10;

/// Exact `Tr ρ O` for the uniform ground-space mixture, `O` a Pauli string.
pub fn expect_pauli(gs: &GroundSpace, obs: &PauliString) -> Result<f64, QsimError> {
    let n = gs.n_qubits();
    obs.check_in_range(n)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for v in &gs.basis {
        acc += state_expect(v, obs);
    }
    acc /= gs.degeneracy() as f64;
    if acc.im.abs() > IMAG_TOL {
        return Err(QsimError::InvalidState(format!(
            "expectation has imaginary residue {:.3e}",
            acc.im
        )));
    }
    Ok(acc.re)
}

/// `⟨v|O|v⟩` for a single pure state.
pub fn state_expect(v: &PureState, obs: &PauliString) -> Complex64 {
    let n = v.n_qubits();
    let amps = v.amplitudes();
    let mut acc = Complex64::new(0.0, 0.0);
    for (idx, &a) in amps.iter().enumerate() {
        let (target, phase) = pauli_action(obs, idx, n);
        acc += amps[target].conj() * phase * a;
    }
    acc
}

/// Rényi-2 entanglement entropy `−ln Tr ρ_A²` of the uniform ground-space
/// mixture reduced to `region` (natural logarithm).
pub fn renyi2_exact(gs: &GroundSpace, region: &[usize]) -> Result<f64, QsimError> {
    let rho = reduced_density(gs, region)?;
    let d = rho.len();
    let mut purity = 0.0;
    for row in 0..d {
        for col in 0..d {
            purity += rho[row][col].norm_sqr();
        }
    }
    Ok(-purity.ln())
}

/// Reduced density matrix of the ground-space mixture on `region` (sites in
/// the given order become the subsystem's qubit order).
pub fn reduced_density(
    gs: &GroundSpace,
    region: &[usize],
) -> Result<Vec<Vec<Complex64>>, QsimError> {
    let n = gs.n_qubits();
    if region.is_empty() || region.len() > MAX_REGION {
        return Err(QsimError::SiteOutOfRange(format!(
            "region size {} not in 1..={MAX_REGION}",
            region.len()
        )));
    }
    let mut sorted = region.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != region.len() {
        return Err(QsimError::SiteOutOfRange(
            "region sites must be distinct".to_string(),
        ));
    }
    if *sorted.last().unwrap() >= n {
        return Err(QsimError::SiteOutOfRange(format!(
            "region site {} out of range for {} qubits",
            sorted.last().unwrap(),
            n
        )));
    }

    let da = 1usize << region.len();
    let rest: Vec<usize> = (0..n).filter(|s| !region.contains(s)).collect();
    let db = 1usize << rest.len();

    // full index for (a, b) split along (region, rest)
    let index_of = |a: usize, b: usize| -> usize {
        let mut idx = 0usize;
        for (k, &site) in region.iter().enumerate() {
            let bit = (a >> (region.len() - 1 - k)) & 1;
            idx |= bit << bits::bit_pos(site, n);
        }
        for (k, &site) in rest.iter().enumerate() {
            let bit = (b >> (rest.len() - 1 - k)) & 1;
            idx |= bit << bits::bit_pos(site, n);
        }
        idx
    };

    let mut rho = vec![vec![Complex64::new(0.0, 0.0); da]; da];
    let weight = 1.0 / gs.degeneracy() as f64;
    for v in &gs.basis {
        let amps = v.amplitudes();
        for a in 0..da {
            for a2 in 0..da {
                let mut acc = Complex64::new(0.0, 0.0);
                for b in 0..db {
                    acc += amps[index_of(a, b)] * amps[index_of(a2, b)].conj();
                }
                rho[a][a2] += weight * acc;
            }
        }
    }
    Ok(rho)
}
