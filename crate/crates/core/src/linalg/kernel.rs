//! Numerical kernels, canonical subspace bases and linear intertwiner solves.

use num_complex::Complex64;

use super::kron::kron;
use super::matrix::{unit_vector, vdot, vnorm, CMatrix, ZERO};
use super::svd::svd_right;
use crate::error::Result;

/// Orthonormal basis of the numerical kernel of `m`: right singular vectors
/// whose singular value is at most `rtol` times the largest one.
///
/// The basis is canonicalized (see [`canonical_basis`]) so that it depends
/// only on the kernel subspace, not on the solver's internal choices.
pub fn kernel_basis(m: &CMatrix, rtol: f64) -> Result<Vec<Vec<Complex64>>> {
    let s = svd_right(m)?;
    let top = s.sigma.first().copied().unwrap_or(0.0);
    Ok(kernel_from_svd(&s.sigma, &s.v, rtol * top))
}

/// Kernel with an absolute singular-value threshold. Used where the operator is
/// known to have unit scale, so that an exactly-zero operator is not mistaken
/// for a well-conditioned one.
pub fn kernel_basis_abs(m: &CMatrix, atol: f64) -> Result<Vec<Vec<Complex64>>> {
    let s = svd_right(m)?;
    Ok(kernel_from_svd(&s.sigma, &s.v, atol))
}

fn kernel_from_svd(sigma: &[f64], v: &CMatrix, threshold: f64) -> Vec<Vec<Complex64>> {
    let n = v.rows();
    let mut raw: Vec<Vec<Complex64>> = (0..n).filter(|&j| sigma[j] <= threshold).map(|j| v.col(j)).collect();
    if raw.is_empty() {
        return raw;
    }
    // Input rows < cols were zero-padded, so all columns are valid.
    raw = canonical_basis(&raw);
    raw
}

/// Deterministic orthonormal basis of `span(vectors)` (assumed orthonormal):
/// Gram–Schmidt over the projections of the standard basis vectors, taken in
/// ascending index order.
pub fn canonical_basis(vectors: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let k = vectors.len();
    if k == 0 {
        return Vec::new();
    }
    let n = vectors[0].len();
    let project = |x: &[Complex64]| -> Vec<Complex64> {
        let mut out = vec![ZERO; n];
        for b in vectors {
            let c = vdot(b, x);
            for i in 0..n {
                out[i] += b[i] * c;
            }
        }
        out
    };
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(k);
    let mut used = vec![false; n];
    // First pass in index order with a generous acceptance threshold; a
    // pivoted pass picks up anything the first pass skipped.
    let accept = 0.1 / (n as f64).sqrt();
    for i in 0..n {
        if basis.len() == k {
            break;
        }
        let r = residual_after(&project(&unit_vector(n, i)), &basis);
        let rn = vnorm(&r);
        if rn > accept {
            basis.push(r.iter().map(|z| z / rn).collect());
            used[i] = true;
        }
    }
    while basis.len() < k {
        let mut best = (0.0, usize::MAX, Vec::new());
        for i in (0..n).filter(|&i| !used[i]) {
            let r = residual_after(&project(&unit_vector(n, i)), &basis);
            let rn = vnorm(&r);
            if rn > best.0 {
                best = (rn, i, r);
            }
        }
        if best.1 == usize::MAX || best.0 == 0.0 {
            break;
        }
        used[best.1] = true;
        let rn = best.0;
        basis.push(best.2.iter().map(|z| z / rn).collect());
    }
    basis
}

/// Removes the components along an orthonormal family (twice, for stability).
pub fn residual_after(x: &[Complex64], basis: &[Vec<Complex64>]) -> Vec<Complex64> {
    let mut r = x.to_vec();
    for _ in 0..2 {
        for b in basis {
            let c = vdot(b, &r);
            for (ri, bi) in r.iter_mut().zip(b) {
                *ri -= bi * c;
            }
        }
    }
    r
}

/// Orthonormalizes vectors in order, dropping those whose residual falls below
/// `tol` times the largest input norm. Measuring against the whole family keeps
/// a vector that is itself rounding noise from being normalized into a new
/// direction.
pub fn orthonormalize(vectors: &[Vec<Complex64>], tol: f64) -> Vec<Vec<Complex64>> {
    let scale = vectors.iter().map(|v| vnorm(v)).fold(0.0, f64::max);
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    if scale == 0.0 {
        return basis;
    }
    for v in vectors {
        let r = residual_after(v, &basis);
        let rn = vnorm(&r);
        if rn > tol * scale {
            basis.push(r.iter().map(|z| z / rn).collect());
        }
    }
    basis
}

/// Orthonormal basis of the orthogonal complement of the column span of an
/// isometry `v` (n×k), canonicalized.
pub fn complement(v: &CMatrix) -> CMatrix {
    let n = v.rows();
    let basis = v.columns();
    let mut out: Vec<Vec<Complex64>> = Vec::new();
    let need = n - basis.len().min(n);
    let mut all = basis.clone();
    // Candidate standard vectors in index order; accept clear residuals first.
    let accept = 0.1 / (n.max(1) as f64).sqrt();
    let mut used = vec![false; n];
    for i in 0..n {
        if out.len() == need {
            break;
        }
        let r = residual_after(&unit_vector(n, i), &all);
        let rn = vnorm(&r);
        if rn > accept {
            let w: Vec<Complex64> = r.iter().map(|z| z / rn).collect();
            all.push(w.clone());
            out.push(w);
            used[i] = true;
        }
    }
    while out.len() < need {
        let (mut best_n, mut best_i) = (0.0, usize::MAX);
        for i in (0..n).filter(|&i| !used[i]) {
            let rn = vnorm(&residual_after(&unit_vector(n, i), &all));
            if rn > best_n {
                best_n = rn;
                best_i = i;
            }
        }
        if best_i == usize::MAX {
            break;
        }
        used[best_i] = true;
        let r = residual_after(&unit_vector(n, best_i), &all);
        let rn = vnorm(&r);
        let w: Vec<Complex64> = r.iter().map(|z| z / rn).collect();
        all.push(w.clone());
        out.push(w);
    }
    CMatrix::from_columns(n, &out)
}

/// Frobenius-orthonormal basis of `{X : X N_k = M_k X for all k}` where each
/// pair is `(M_k, N_k)` with `M_k` of size d̃×d̃ and `N_k` of size d×d.
///
/// Solved as the kernel of the stacked map `X ↦ (X N_k − M_k X)_k` written on
/// the row-major vectorization of `X`.
pub fn commutation_kernel(pairs: &[(CMatrix, CMatrix)], rtol: f64) -> Result<Vec<CMatrix>> {
    let Some((m0, n0)) = pairs.first() else {
        return Ok(Vec::new());
    };
    let (dt, d) = (m0.rows(), n0.rows());
    let blocks: Vec<CMatrix> = pairs.iter().map(|(m, n)| commutator_operator(m, n)).collect();
    let stacked = CMatrix::vstack(&blocks);
    // Scale by the operands too, so a nearly vanishing operator is not read as
    // well conditioned.
    let scale = pairs.iter().map(|(m, n)| m.norm_fro() + n.norm_fro()).fold(0.0, f64::max);
    let s = svd_right(&stacked)?;
    let top = s.sigma.first().copied().unwrap_or(0.0).max(scale);
    let basis = kernel_from_svd(&s.sigma, &s.v, rtol * top);
    Ok(basis.iter().map(|v| CMatrix::from_vec_rows(dt, d, v)).collect())
}

/// Matrix of `X ↦ X N − M X` on row-major `vec(X)`:
/// `I ⊗ N^T − M ⊗ I`.
pub(crate) fn commutator_operator(m: &CMatrix, n: &CMatrix) -> CMatrix {
    let (dt, d) = (m.rows(), n.rows());
    kron(&CMatrix::identity(dt), &n.transpose()) - kron(m, &CMatrix::identity(d))
}

/// Residual `max_k ‖X N_k − M_k X‖_F`.
pub fn commutation_residual(x: &CMatrix, pairs: &[(CMatrix, CMatrix)]) -> f64 {
    pairs.iter().map(|(m, n)| (x.matmul(n) - m.matmul(x)).norm_fro()).fold(0.0, f64::max)
}

/// Orthogonal projector onto the span of orthonormal columns.
pub fn projector(v: &CMatrix) -> CMatrix {
    v.matmul(&v.adjoint())
}

/// Angle between two subspaces given by orthonormal column sets of equal
/// dimension: the largest principal angle.
pub fn subspace_angle(a: &CMatrix, b: &CMatrix) -> f64 {
    if a.cols() != b.cols() {
        return std::f64::consts::FRAC_PI_2;
    }
    let m = a.adjoint_mul(b);
    let s = svd_right(&m).map(|s| s.sigma).unwrap_or_default();
    let smallest = s.iter().copied().fold(1.0_f64, f64::min).clamp(0.0, 1.0);
    smallest.acos()
}

/// `v` as an n×1 matrix.
pub fn as_column(v: &[Complex64]) -> CMatrix {
    CMatrix::column(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    fn approx_vec(a: &[C], b: &[f64]) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - C::new(*y, 0.0)).norm() < 1e-12)
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&CMatrix::identity(3), 1e-9).unwrap().is_empty());
        let k = kernel_basis(&CMatrix::from_real_diag(&[1.0, 0.0]), 1e-9).unwrap();
        assert_eq!(k.len(), 1);
        assert!(approx_vec(&k[0], &[0.0, 1.0]));
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let k = kernel_basis(&CMatrix::from_real(2, 2, &[1.0, 1.0, 1.0, 1.0]), 1e-9).unwrap();
        assert_eq!(k.len(), 1);
        assert!(approx_vec(&k[0], &[r, -r]));
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let k = kernel_basis(&CMatrix::zeros(3, 3), 1e-9).unwrap();
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn commutant_of_identity_is_everything() {
        let i2 = CMatrix::identity(2);
        let basis = commutation_kernel(&[(i2.clone(), i2)], 1e-9).unwrap();
        assert_eq!(basis.len(), 4);
    }

    #[test]
    fn incompatible_scalars_have_no_intertwiner() {
        let one = CMatrix::from_real(1, 1, &[1.0]);
        let zero = CMatrix::from_real(1, 1, &[0.0]);
        let basis = commutation_kernel(&[(zero.clone(), one.clone()), (one, zero)], 1e-9).unwrap();
        assert!(basis.is_empty());
    }

    #[test]
    fn noise_vectors_are_dropped() {
        let one = vec![C::new(1.0, 0.0), C::new(0.0, 0.0)];
        let noise = vec![C::new(0.0, 0.0), C::new(1e-17, 0.0)];
        assert_eq!(orthonormalize(&[one, noise.clone()], 1e-8).len(), 1);
        assert!(orthonormalize(&[noise], 1e-8).len() == 1);
    }

    #[test]
    fn complement_spans_rest() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let v = CMatrix::from_real(2, 1, &[r, r]);
        let c = complement(&v);
        assert_eq!(c.cols(), 1);
        assert!(vdot(&c.col(0), &v.col(0)).norm() < 1e-15);
    }
}
