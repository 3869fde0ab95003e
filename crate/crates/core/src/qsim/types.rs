use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::QsimError;
use crate::bits;

/// The two supported Hamiltonian families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Transverse-field Ising chain, one parameter `g ∈ [0, 1]`.
    Tfim,
    /// Cluster-Ising chain, three parameters on the simplex `g1+g2+g3 = 1`.
    ClusterIsing,
}

impl Family {
    /// Number of real Hamiltonian parameters.
    pub fn param_dim(self) -> usize {
        match self {
            Family::Tfim => 1,
            Family::ClusterIsing => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Tfim => "tfim",
            Family::ClusterIsing => "cluster_ising",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A point in a family's parameter space together with the chain length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianSpec {
    pub family: Family,
    pub params: Vec<f64>,
    pub n_qubits: usize,
}

const SIMPLEX_TOL: f64 = 1e-12;

impl HamiltonianSpec {
    /// Validated constructor; rejects parameters outside the family's domain.
    pub fn new(family: Family, params: Vec<f64>, n_qubits: usize) -> Result<Self, QsimError> {
        let spec = HamiltonianSpec {
            family,
            params,
            n_qubits,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Transverse-field Ising chain at coupling `g`.
    pub fn tfim(g: f64, n_qubits: usize) -> Result<Self, QsimError> {
        Self::new(Family::Tfim, vec![g], n_qubits)
    }

    /// Cluster-Ising chain at `(g1, g2, g3)`.
    pub fn cluster_ising(g: [f64; 3], n_qubits: usize) -> Result<Self, QsimError> {
        Self::new(Family::ClusterIsing, g.to_vec(), n_qubits)
    }

    pub fn validate(&self) -> Result<(), QsimError> {
        if self.n_qubits < 3 {
            return Err(QsimError::InvalidParams(format!(
                "n_qubits = {} but the chain needs n_qubits >= 3 (three-site terms)",
                self.n_qubits
            )));
        }
        if self.params.len() != self.family.param_dim() {
            return Err(QsimError::InvalidParams(format!(
                "family {} takes {} parameter(s), got {}",
                self.family,
                self.family.param_dim(),
                self.params.len()
            )));
        }
        if self.params.iter().any(|p| !p.is_finite()) {
            return Err(QsimError::InvalidParams(
                "parameters must be finite".to_string(),
            ));
        }
        match self.family {
            Family::Tfim => {
                let g = self.params[0];
                if !(0.0..=1.0).contains(&g) {
                    return Err(QsimError::InvalidParams(format!(
                        "tfim requires 0 <= g <= 1, got g = {g}"
                    )));
                }
            }
            Family::ClusterIsing => {
                if self.params.iter().any(|&p| p < 0.0) {
                    return Err(QsimError::InvalidParams(format!(
                        "cluster_ising requires g1,g2,g3 >= 0, got {:?}",
                        self.params
                    )));
                }
                let sum: f64 = self.params.iter().sum();
                if (sum - 1.0).abs() > SIMPLEX_TOL {
                    return Err(QsimError::InvalidParams(format!(
                        "cluster_ising requires g1+g2+g3 = 1 within {SIMPLEX_TOL:e}, got sum = {sum}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Single-qubit Pauli label. Identity is represented by absence from a
/// [`PauliString`]'s support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn symbol(self) -> char {
        match self {
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A tensor product of single-qubit Paulis on distinct sites; sites outside
/// the support carry identity. Stored sorted by site.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliString {
    support: Vec<(usize, Pauli)>,
}

impl PauliString {
    /// Build from `(site, label)` pairs. Sites must be distinct; the support
    /// must be non-empty.
    pub fn new(ops: impl IntoIterator<Item = (usize, Pauli)>) -> Result<Self, QsimError> {
        let mut support: Vec<(usize, Pauli)> = ops.into_iter().collect();
        support.sort_by_key(|&(site, _)| site);
        if support.is_empty() {
            return Err(QsimError::InvalidParams(
                "observable support must be non-empty".to_string(),
            ));
        }
        if support.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(QsimError::InvalidParams(
                "observable sites must be distinct".to_string(),
            ));
        }
        Ok(PauliString { support })
    }

    /// Single-site observable.
    pub fn single(site: usize, p: Pauli) -> Self {
        PauliString {
            support: vec![(site, p)],
        }
    }

    /// `Z_i Z_j`-style two-site string.
    pub fn two(site_a: usize, pa: Pauli, site_b: usize, pb: Pauli) -> Result<Self, QsimError> {
        Self::new([(site_a, pa), (site_b, pb)])
    }

    /// `(site, label)` pairs sorted by site.
    pub fn support(&self) -> &[(usize, Pauli)] {
        &self.support
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }

    /// Largest site index in the support.
    pub fn max_site(&self) -> usize {
        self.support.last().map(|&(s, _)| s).unwrap_or(0)
    }

    /// All sites shifted by `shift` modulo `n` (cyclic translation).
    pub fn translated(&self, shift: usize, n: usize) -> Self {
        let mut support: Vec<(usize, Pauli)> = self
            .support
            .iter()
            .map(|&(site, p)| ((site + shift) % n, p))
            .collect();
        support.sort_by_key(|&(site, _)| site);
        PauliString { support }
    }

    pub fn check_in_range(&self, n_qubits: usize) -> Result<(), QsimError> {
        if self.max_site() >= n_qubits {
            return Err(QsimError::SiteOutOfRange(format!(
                "observable touches site {} but the register has {} sites",
                self.max_site(),
                n_qubits
            )));
        }
        Ok(())
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (site, p)) in self.support.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", p.symbol(), site)?;
        }
        Ok(())
    }
}

/// A normalized pure state of `n_qubits` qubits.
///
/// Amplitude index convention: site 0 is the most significant bit (see
/// [`crate::bits`]).
#[derive(Debug, Clone)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
    n_qubits: usize,
}

const NORM_TOL: f64 = 1e-10;

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>, n_qubits: usize) -> Result<Self, QsimError> {
        if amplitudes.len() != bits::dim(n_qubits) {
            return Err(QsimError::DimensionMismatch(format!(
                "amplitude vector has length {} but {n_qubits} qubits need {}",
                amplitudes.len(),
                bits::dim(n_qubits)
            )));
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq.sqrt() - 1.0).abs() > NORM_TOL {
            return Err(QsimError::InvalidState(format!(
                "state norm is {} (must be 1 within {NORM_TOL:e})",
                norm_sq.sqrt()
            )));
        }
        Ok(PureState {
            amplitudes,
            n_qubits,
        })
    }

    /// Real vector promoted to a complex state.
    pub fn from_real(re: &[f64], n_qubits: usize) -> Result<Self, QsimError> {
        Self::new(
            re.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            n_qubits,
        )
    }

    /// Computational-basis product state `|bitstring⟩`.
    pub fn basis_state(index: usize, n_qubits: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); bits::dim(n_qubits)];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        PureState {
            amplitudes,
            n_qubits,
        }
    }

    /// Uniform superposition `|+⟩^n`.
    pub fn plus_state(n_qubits: usize) -> Self {
        let d = bits::dim(n_qubits);
        let a = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
        PureState {
            amplitudes: vec![a; d],
            n_qubits,
        }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

/// The ground level of a Hamiltonian: lowest eigenvalue plus an orthonormal
/// basis of every eigenvector within `degeneracy_tol` of it.
///
/// The physical state attached to a `GroundSpace` is the uniform mixture over
/// `basis` — the zero-temperature limit of the thermal state, well defined
/// even through symmetry-broken phases.
#[derive(Debug, Clone)]
pub struct GroundSpace {
    pub energy: f64,
    pub basis: Vec<PureState>,
    pub degeneracy_tol: f64,
}

impl GroundSpace {
    pub fn degeneracy(&self) -> usize {
        self.basis.len()
    }

    pub fn n_qubits(&self) -> usize {
        self.basis[0].n_qubits()
    }

    /// Pairwise orthonormality check, `1e-8` magnitude bound on off-diagonal
    /// overlaps.
    pub fn check_orthonormal(&self) -> Result<(), QsimError> {
        for (i, a) in self.basis.iter().enumerate() {
            for (j, b) in self.basis.iter().enumerate().skip(i + 1) {
                let ov = a.inner(b).norm();
                if ov > 1e-8 {
                    return Err(QsimError::InvalidState(format!(
                        "ground basis vectors {i} and {j} overlap by {ov:.3e}"
                    )));
                }
            }
        }
        Ok(())
    }
}
