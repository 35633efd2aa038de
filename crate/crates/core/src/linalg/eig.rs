//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each rotation first rotates the phase of the `(p, q)` entry to the positive
//! real axis and then applies an ordinary real Jacobi rotation, so the
//! accumulated transform stays exactly unitary in exact arithmetic.

use num_complex::Complex64;

use super::matrix::{CMatrix, ZERO};
use crate::error::{Error, Result};

/// Convergence target: off-diagonal Frobenius norm relative to `‖M‖_F`.
pub const JACOBI_TOL: f64 = 1e-14;
/// Sweep budget before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order and the unitary whose columns are the
/// matching eigenvectors.
#[derive(Debug, Clone)]
pub struct HermEig {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl HermEig {
    /// `Q diag(f(λ)) Q^*`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let n = self.values.len();
        let mut scaled = self.vectors.clone();
        for j in 0..n {
            let s = f(self.values[j]);
            for i in 0..n {
                scaled[(i, j)] *= s;
            }
        }
        scaled.matmul(&self.vectors.adjoint())
    }

    pub fn reconstruct(&self) -> CMatrix {
        self.reconstruct_with(|x| x)
    }
}

/// Hermitian eigendecomposition by cyclic Jacobi sweeps.
///
/// The input is symmetrized as `(M + M^*)/2` after the Hermitian gate, so
/// rounding-level asymmetry never leaks into the eigenvectors.
pub fn hermitian_eig(m: &CMatrix, rtol: f64) -> Result<HermEig> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!("eigensolver needs a square matrix, got {}x{}", m.rows(), m.cols())));
    }
    let n = m.rows();
    let scale = m.norm_fro();
    let defect = m.hermitian_defect();
    if defect > rtol * scale {
        return Err(Error::NotHermitian { defect, bound: rtol * scale });
    }
    let mut a = m.hermitian_part();
    let mut q = CMatrix::identity(n);
    if n == 0 || scale == 0.0 {
        return Ok(finish(a, q));
    }

    let target = JACOBI_TOL * scale;
    let mut converged = false;
    for _sweep in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for r in (p + 1)..n {
                rotate(&mut a, &mut q, p, r);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > target {
        return Err(Error::NoConvergence(format!(
            "off-diagonal norm {:.3e} after {MAX_SWEEPS} sweeps",
            off_diagonal_norm(&a)
        )));
    }
    Ok(finish(a, q))
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate(a: &mut CMatrix, q: &mut CMatrix, p: usize, r: usize) {
    let n = a.rows();
    let apr = a[(p, r)];
    let mag = apr.norm();
    if mag == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let arr = a[(r, r)].re;
    // Skip entries already negligible against both diagonal entries.
    if mag <= f64::EPSILON * 1e-3 * (app.abs() + arr.abs()) {
        a[(p, r)] = ZERO;
        a[(r, p)] = ZERO;
        return;
    }

    // Phase step: D^* A D with D = diag(.., e^{-iφ} at r, ..).
    let phase = apr / mag;
    let phase_c = phase.conj();
    for i in 0..n {
        a[(i, r)] *= phase_c;
    }
    for j in 0..n {
        a[(r, j)] *= phase;
    }
    for i in 0..n {
        q[(i, r)] *= phase_c;
    }
    // Now a[(p, r)] = mag is real.

    let theta = (arr - app) / (2.0 * mag);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // Columns: a' = a J with J = [[c, s], [-s, c]] on (p, r).
    for i in 0..n {
        let aip = a[(i, p)];
        let air = a[(i, r)];
        a[(i, p)] = aip * c - air * s;
        a[(i, r)] = aip * s + air * c;
    }
    // Rows: a'' = J^T a'.
    for j in 0..n {
        let apj = a[(p, j)];
        let arj = a[(r, j)];
        a[(p, j)] = apj * c - arj * s;
        a[(r, j)] = apj * s + arj * c;
    }
    a[(p, r)] = ZERO;
    a[(r, p)] = ZERO;
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(r, r)] = Complex64::new(a[(r, r)].re, 0.0);
    for i in 0..n {
        let qip = q[(i, p)];
        let qir = q[(i, r)];
        q[(i, p)] = qip * c - qir * s;
        q[(i, r)] = qip * s + qir * c;
    }
}

/// Sorts eigenpairs ascending and phase-normalizes each eigenvector so that its
/// first significant coordinate is real positive. Within a cluster of equal
/// eigenvalues, vectors are ordered by the index of that coordinate.
fn finish(a: CMatrix, mut q: CMatrix) -> HermEig {
    let n = a.rows();
    for j in 0..n {
        normalize_phase_column(&mut q, j);
    }
    let lead: Vec<usize> = (0..n).map(|j| leading_index(&q.col(j))).collect();
    let vals: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| vals[i].total_cmp(&vals[j]));
    let scale = vals.iter().fold(0.0_f64, |m, v| m.max(v.abs())).max(f64::MIN_POSITIVE);
    // Re-order runs of numerically equal eigenvalues by leading index.
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (vals[order[end]] - vals[order[start]]).abs() <= 1e-12 * scale {
            end += 1;
        }
        order[start..end].sort_by_key(|&k| lead[k]);
        start = end;
    }
    HermEig { values: order.iter().map(|&k| vals[k]).collect(), vectors: q.select_cols(&order) }
}

fn leading_index(v: &[Complex64]) -> usize {
    let big = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    v.iter().position(|z| z.norm() > 1e-8 * big).unwrap_or(0)
}

pub(crate) fn normalize_phase_column(q: &mut CMatrix, j: usize) {
    let col = q.col(j);
    let k = leading_index(&col);
    let z = col[k];
    if z.norm() == 0.0 {
        return;
    }
    let ph = z.conj() / z.norm();
    for i in 0..q.rows() {
        q[(i, j)] *= ph;
    }
    q[(k, j)] = Complex64::new(q[(k, j)].re, 0.0);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random::{random_hermitian, random_unitary};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_case() {
        let e = hermitian_eig(&CMatrix::identity(2), 1e-9).unwrap();
        assert_eq!(e.values, vec![1.0, 1.0]);
        assert!((e.vectors.clone() - CMatrix::identity(2)).norm_fro() < 1e-15);
    }

    #[test]
    fn swap_matrix() {
        let m = CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let e = hermitian_eig(&m, 1e-9).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-15 && (e.values[1] - 1.0).abs() < 1e-15);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let expected = CMatrix::from_real(2, 2, &[r, r, -r, r]);
        assert!((e.vectors - expected).norm_fro() < 1e-14);
    }

    #[test]
    fn recovers_planted_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let q = random_unitary(3, &mut rng);
        let m = CMatrix::from_real_diag(&[0.1, 0.5, 0.9]).conjugate_by(&q);
        let e = hermitian_eig(&m, 1e-9).unwrap();
        for (got, want) in e.values.iter().zip([0.1, 0.5, 0.9]) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(hermitian_eig(&m, 1e-9), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn deterministic_and_accurate_on_random_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=12 {
            let m = random_hermitian(n, &mut rng);
            let e1 = hermitian_eig(&m, 1e-9).unwrap();
            let e2 = hermitian_eig(&m, 1e-9).unwrap();
            assert_eq!(e1.values, e2.values);
            assert_eq!(e1.vectors, e2.vectors);
            let rec = (e1.reconstruct() - &m).norm_fro();
            assert!(rec <= 1e-11 * m.norm_fro(), "n={n} residual {rec}");
            let orth = (e1.vectors.adjoint_mul(&e1.vectors) - CMatrix::identity(n)).norm_fro();
            assert!(orth < 1e-12);
            assert!(e1.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
