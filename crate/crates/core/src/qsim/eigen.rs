use rand::Rng;

use super::hamiltonian::Hamiltonian;
use super::types::{GroundSpace, PureState};
use super::QsimError;
use crate::rng::{derive_rng, stream};

/// Largest dimension handled by the dense eigensolver.
pub const DENSE_DIM_LIMIT: usize = 4096;

/// Hard cap on the Hilbert-space dimension (desk-scale guard).
pub const MAX_DIM: usize = 1 << 14;

/// Relative factor applied to the spectral width to obtain the automatic
/// degeneracy tolerance. Finite-size splittings below this are treated as
/// exact degeneracy, matching the zero-temperature mixture.
const AUTO_TOL_FACTOR: f64 = 1e-8;

/// Upper bound on the tracked ground-level degeneracy.
const MAX_DEGENERACY: usize = 16;

const LANCZOS_MAX_ITER: usize = 600;

/// Ground level of `h` with an explicit degeneracy tolerance.
///
/// `energy` is the smallest eigenvalue; `basis` spans every eigenvector whose
/// eigenvalue lies within `degeneracy_tol` of it, orthonormalized.
pub fn ground_space(h: &Hamiltonian, degeneracy_tol: f64) -> Result<GroundSpace, QsimError> {
    ground_space_impl(h, Some(degeneracy_tol))
}

/// Ground level of `h` with the default tolerance `1e-8 ×` (spectral width).
pub fn ground_space_auto(h: &Hamiltonian) -> Result<GroundSpace, QsimError> {
    ground_space_impl(h, None)
}

fn ground_space_impl(h: &Hamiltonian, tol: Option<f64>) -> Result<GroundSpace, QsimError> {
    let d = h.dim();
    if d > MAX_DIM {
        return Err(QsimError::DimensionTooLarge { dim: d, max: MAX_DIM });
    }
    let (energy, raw_basis, degeneracy_tol) = if d <= DENSE_DIM_LIMIT {
        dense_ground(h, tol)?
    } else {
        lanczos_ground(h, tol)?
    };

    let basis = orthonormalize(raw_basis);
    let floor = residual_floor(h);
    let bound = (10.0 * degeneracy_tol).max(floor);
    for v in &basis {
        let r = residual(h, v, energy);
        if r > bound {
            return Err(QsimError::InvalidState(format!(
                "ground vector residual {r:.3e} exceeds bound {bound:.3e}"
            )));
        }
    }

    let gs = GroundSpace {
        energy,
        basis: basis
            .into_iter()
            .map(|v| PureState::from_real(&v, h.n_qubits()))
            .collect::<Result<_, _>>()?,
        degeneracy_tol,
    };
    gs.check_orthonormal()?;
    Ok(gs)
}

/// Numerical floor for the eigenpair residual bound, used when the requested
/// tolerance is tighter than double precision can certify.
fn residual_floor(h: &Hamiltonian) -> f64 {
    let scale = h.max_coupling().max(1.0) * h.n_qubits() as f64;
    1e-11 * scale
}

fn dense_ground(
    h: &Hamiltonian,
    tol: Option<f64>,
) -> Result<(f64, Vec<Vec<f64>>, f64), QsimError> {
    let dense = h.to_dense()?;
    let eig = dense.symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let e0 = eig.eigenvalues[order[0]];
    let width = eig.eigenvalues[order[order.len() - 1]] - e0;
    let degeneracy_tol = tol.unwrap_or(AUTO_TOL_FACTOR * width);

    let mut basis = Vec::new();
    for &k in &order {
        if eig.eigenvalues[k] <= e0 + degeneracy_tol && basis.len() < MAX_DEGENERACY {
            basis.push(eig.eigenvectors.column(k).iter().copied().collect());
        }
    }
    Ok((e0, basis, degeneracy_tol))
}

fn lanczos_ground(
    h: &Hamiltonian,
    tol: Option<f64>,
) -> Result<(f64, Vec<Vec<f64>>, f64), QsimError> {
    // First run fixes E0 and the spectral-width estimate for the auto
    // tolerance; deflated reruns collect the rest of the degenerate level.
    let first = lanczos_lowest(h, &[], 0)?;
    let e0 = first.value;
    let degeneracy_tol = tol.unwrap_or(AUTO_TOL_FACTOR * first.width);

    let mut basis = vec![first.vector];
    for run in 1..MAX_DEGENERACY {
        let next = lanczos_lowest(h, &basis, run as u64)?;
        if next.value <= e0 + degeneracy_tol {
            basis.push(next.vector);
        } else {
            break;
        }
    }
    Ok((e0, basis, degeneracy_tol))
}

struct LanczosResult {
    value: f64,
    vector: Vec<f64>,
    /// Ritz spectral-width estimate from the same Krylov space.
    width: f64,
}

/// Lanczos with full reorthogonalization for the lowest eigenpair of `h`
/// restricted to the orthogonal complement of `deflate`.
fn lanczos_lowest(
    h: &Hamiltonian,
    deflate: &[Vec<f64>],
    run: u64,
) -> Result<LanczosResult, QsimError> {
    let d = h.dim();
    let scale = h.max_coupling().max(1.0) * h.n_qubits() as f64;
    let target_resid = 1e-10 * scale;

    let mut rng = derive_rng(0x6c61_6e63, stream::LANCZOS, run);
    let mut v: Vec<f64> = (0..d).map(|_| rng.gen::<f64>() - 0.5).collect();
    project_out(&mut v, deflate);
    normalize(&mut v).ok_or_else(|| QsimError::InvalidState(
        "lanczos start vector vanished after deflation".to_string(),
    ))?;

    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut krylov: Vec<Vec<f64>> = vec![v.clone()];
    let max_iter = LANCZOS_MAX_ITER.min(d - deflate.len());

    let mut last_ritz = f64::INFINITY;
    for iter in 0..max_iter {
        let mut w = vec![0.0; d];
        h.apply_real(&v, &mut w);
        let alpha = dot(&w, &v);
        alphas.push(alpha);

        // Full reorthogonalization against the Krylov basis and the deflated
        // vectors keeps degenerate copies from re-entering.
        for prev in krylov.iter() {
            let p = dot(&w, prev);
            axpy(&mut w, -p, prev);
        }
        for prev in krylov.iter() {
            let p = dot(&w, prev);
            axpy(&mut w, -p, prev);
        }
        project_out(&mut w, deflate);

        let beta = dot(&w, &w).sqrt();

        // Check convergence of the lowest Ritz pair.
        let (ritz_vals, ritz_vecs) = tridiag_eigen(&alphas, &betas);
        let low = 0;
        let ritz = ritz_vals[low];
        let tail = ritz_vecs[(alphas.len() - 1, low)].abs();
        let ritz_resid = beta * tail;
        let breakdown = beta < 1e-13 * scale;
        let converged = ritz_resid <= target_resid && (last_ritz - ritz).abs() <= 1e-13 * scale;
        if converged || breakdown || iter + 1 == max_iter {
            if !(converged || breakdown) {
                return Err(QsimError::NonConvergence {
                    iterations: iter + 1,
                    residual: ritz_resid,
                });
            }
            let mut vec = vec![0.0; d];
            for (j, basis_vec) in krylov.iter().enumerate() {
                axpy(&mut vec, ritz_vecs[(j, low)], basis_vec);
            }
            project_out(&mut vec, deflate);
            normalize(&mut vec).ok_or_else(|| QsimError::InvalidState(
                "lanczos ritz vector vanished".to_string(),
            ))?;
            let width = ritz_vals[ritz_vals.len() - 1] - ritz_vals[0];
            return Ok(LanczosResult {
                value: ritz,
                vector: vec,
                width,
            });
        }
        last_ritz = ritz;

        betas.push(beta);
        v = w;
        for x in &mut v {
            *x /= beta;
        }
        krylov.push(v.clone());
    }
    unreachable!("loop exits via convergence, breakdown, or the max_iter arm")
}

/// Eigendecomposition of the symmetric tridiagonal (alphas, betas), values
/// ascending, vectors as columns.
fn tridiag_eigen(alphas: &[f64], betas: &[f64]) -> (Vec<f64>, nalgebra::DMatrix<f64>) {
    let m = alphas.len();
    let mut t = nalgebra::DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        t[(i, i)] = alphas[i];
        if i + 1 < m {
            t[(i, i + 1)] = betas[i];
            t[(i + 1, i)] = betas[i];
        }
    }
    let eig = t.symmetric_eigen();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let vals: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut vecs = nalgebra::DMatrix::<f64>::zeros(m, m);
    for (new_col, &k) in order.iter().enumerate() {
        vecs.set_column(new_col, &eig.eigenvectors.column(k));
    }
    (vals, vecs)
}

fn residual(h: &Hamiltonian, v: &[f64], energy: f64) -> f64 {
    let mut hv = vec![0.0; v.len()];
    h.apply_real(v, &mut hv);
    hv.iter()
        .zip(v)
        .map(|(a, b)| (a - energy * b) * (a - energy * b))
        .sum::<f64>()
        .sqrt()
}

fn orthonormalize(mut vecs: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(vecs.len());
    for v in vecs.iter_mut() {
        project_out(v, &out);
        if normalize(v).is_some() {
            out.push(v.clone());
        }
    }
    out
}

fn project_out(v: &mut [f64], basis: &[Vec<f64>]) {
    for b in basis {
        let p = dot(v, b);
        axpy(v, -p, b);
    }
}

fn normalize(v: &mut [f64]) -> Option<f64> {
    let norm = dot(v, v).sqrt();
    if norm < 1e-10 {
        return None;
    }
    for x in v.iter_mut() {
        *x /= norm;
    }
    Some(norm)
}

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
fn axpy(y: &mut [f64], a: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}
