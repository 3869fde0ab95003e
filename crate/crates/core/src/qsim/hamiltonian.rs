use nalgebra::DMatrix;
use num_complex::Complex64;

use super::types::{Family, HamiltonianSpec, Pauli, PauliString};
use super::QsimError;
use crate::bits;

/// A Hermitian operator stored as a weighted sum of Pauli strings.
///
/// The term list is the canonical sparse representation: matrix-vector
/// products are applied term by term with bit arithmetic, and a dense matrix
/// is materialized only for small dimensions.
#[derive(Debug, Clone)]
pub struct Hamiltonian {
    n_qubits: usize,
    terms: Vec<(f64, PauliString)>,
}

/// Build the operator for a validated parameter point.
///
/// Both families are sums over all `n` sites with periodic indexing; terms
/// with zero coefficient are kept so that every site's term structure is
/// identical across the parameter space.
pub fn build_hamiltonian(spec: &HamiltonianSpec) -> Result<Hamiltonian, QsimError> {
    spec.validate()?;
    Ok(Hamiltonian {
        n_qubits: spec.n_qubits,
        terms: hamiltonian_terms(spec),
    })
}

/// The `(coefficient, PauliString)` terms of a spec's Hamiltonian.
///
/// Shared by the dense/sparse builders and by the shadow-based energy
/// estimator, so both sides always agree on the term decomposition.
pub fn hamiltonian_terms(spec: &HamiltonianSpec) -> Vec<(f64, PauliString)> {
    let n = spec.n_qubits;
    let mut terms = Vec::new();
    match spec.family {
        Family::Tfim => {
            let g = spec.params[0];
            for i in 0..n {
                let zz = PauliString::two(i, Pauli::Z, (i + 1) % n, Pauli::Z)
                    .expect("distinct sites for n >= 3");
                terms.push((-(1.0 - g), zz));
            }
            for i in 0..n {
                terms.push((-g, PauliString::single(i, Pauli::X)));
            }
        }
        Family::ClusterIsing => {
            let (g1, g2, g3) = (spec.params[0], spec.params[1], spec.params[2]);
            for i in 0..n {
                let prev = (i + n - 1) % n;
                let next = (i + 1) % n;
                let zz = PauliString::two(prev, Pauli::Z, next, Pauli::Z)
                    .expect("distinct sites for n >= 3");
                terms.push((-g1, zz));
            }
            for i in 0..n {
                terms.push((-g2, PauliString::single(i, Pauli::X)));
            }
            for i in 0..n {
                let prev = (i + n - 1) % n;
                let next = (i + 1) % n;
                let zxz = PauliString::new([(prev, Pauli::Z), (i, Pauli::X), (next, Pauli::Z)])
                    .expect("distinct sites for n >= 3");
                terms.push((-g3, zxz));
            }
        }
    }
    terms
}

impl Hamiltonian {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        bits::dim(self.n_qubits)
    }

    pub fn terms(&self) -> &[(f64, PauliString)] {
        &self.terms
    }

    /// Largest absolute term coefficient (the coupling scale).
    pub fn max_coupling(&self) -> f64 {
        self.terms
            .iter()
            .map(|(c, _)| c.abs())
            .fold(0.0, f64::max)
    }

    /// `out += H · v` for a real vector.
    ///
    /// Valid because every term of both families (`X`, `ZZ`, `ZXZ`) is a real
    /// matrix in the computational basis; [`Hamiltonian::apply_real`] panics
    /// if a `Y` ever appears in a term.
    pub fn apply_real(&self, v: &[f64], out: &mut [f64]) {
        let n = self.n_qubits;
        debug_assert_eq!(v.len(), self.dim());
        debug_assert_eq!(out.len(), self.dim());
        for (coeff, string) in &self.terms {
            if *coeff == 0.0 {
                continue;
            }
            let mut flip_mask = 0usize;
            let mut z_mask = 0usize;
            for &(site, p) in string.support() {
                match p {
                    Pauli::X => flip_mask |= 1 << bits::bit_pos(site, n),
                    Pauli::Z => z_mask |= 1 << bits::bit_pos(site, n),
                    Pauli::Y => panic!("apply_real requires Y-free terms"),
                }
            }
            for (idx, &amp) in v.iter().enumerate() {
                let sign = if (idx & z_mask).count_ones() % 2 == 0 {
                    1.0
                } else {
                    -1.0
                };
                out[idx ^ flip_mask] += coeff * sign * amp;
            }
        }
    }

    /// `out += H · v` for a complex vector. Handles arbitrary Pauli terms.
    pub fn apply_complex(&self, v: &[Complex64], out: &mut [Complex64]) {
        let n = self.n_qubits;
        for (coeff, string) in &self.terms {
            if *coeff == 0.0 {
                continue;
            }
            for (idx, &amp) in v.iter().enumerate() {
                let (target, phase) = pauli_action(string, idx, n);
                out[target] += phase * coeff * amp;
            }
        }
    }

    /// Dense symmetric matrix; only for dimensions small enough to hold it.
    pub fn to_dense(&self) -> Result<DMatrix<f64>, QsimError> {
        let d = self.dim();
        if d > super::DENSE_DIM_LIMIT {
            return Err(QsimError::DimensionTooLarge {
                dim: d,
                max: super::DENSE_DIM_LIMIT,
            });
        }
        let n = self.n_qubits;
        let mut m = DMatrix::<f64>::zeros(d, d);
        for (coeff, string) in &self.terms {
            let mut flip_mask = 0usize;
            let mut z_mask = 0usize;
            for &(site, p) in string.support() {
                match p {
                    Pauli::X => flip_mask |= 1 << bits::bit_pos(site, n),
                    Pauli::Z => z_mask |= 1 << bits::bit_pos(site, n),
                    Pauli::Y => panic!("dense build requires Y-free terms"),
                }
            }
            for col in 0..d {
                let sign = if (col & z_mask).count_ones() % 2 == 0 {
                    1.0
                } else {
                    -1.0
                };
                m[(col ^ flip_mask, col)] += coeff * sign;
            }
        }
        Ok(m)
    }
}

/// Action of a Pauli string on basis state `idx`: the target basis index and
/// the accumulated phase. `X|b⟩=|1-b⟩`, `Y|b⟩=i(-1)^b|1-b⟩`, `Z|b⟩=(-1)^b|b⟩`.
pub(super) fn pauli_action(string: &PauliString, idx: usize, n: usize) -> (usize, Complex64) {
    let mut target = idx;
    let mut phase = Complex64::new(1.0, 0.0);
    for &(site, p) in string.support() {
        let b = bits::bit_at(idx, site, n);
        match p {
            Pauli::X => target = bits::flip(target, site, n),
            Pauli::Y => {
                target = bits::flip(target, site, n);
                phase *= if b == 0 {
                    Complex64::new(0.0, 1.0)
                } else {
                    Complex64::new(0.0, -1.0)
                };
            }
            Pauli::Z => {
                if b == 1 {
                    phase = -phase;
                }
            }
        }
    }
    (target, phase)
}
