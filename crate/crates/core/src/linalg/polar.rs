//! Positive functional calculus and polar decomposition.

use num_complex::Complex64;

use super::eig::{hermitian_eig, HermEig};
use super::kernel::{canonical_basis, residual_after};
use super::matrix::{unit_vector, vnorm, CMatrix};
use super::svd::svd;
use crate::error::{Error, Result};

/// Scalar functions applied through the spectral theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsdFn {
    Sqrt,
    InvSqrt,
    Inv,
}

/// `Q f(Λ) Q^*` for a positive semidefinite `m`.
///
/// Eigenvalues in `[-rtol·‖M‖, 0)` are clamped to zero. The inverse functions
/// require the smallest eigenvalue to exceed `dim·rtol·‖M‖`.
pub fn psd_funcalc(m: &CMatrix, f: PsdFn, rtol: f64) -> Result<CMatrix> {
    let e = hermitian_eig(m, rtol)?;
    let n = m.rows();
    let scale = e.values.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
    if let Some(&low) = e.values.first() {
        if low < -rtol * scale.max(f64::MIN_POSITIVE) {
            return Err(Error::NotPositive { eigenvalue: low, bound: -rtol * scale });
        }
        if matches!(f, PsdFn::InvSqrt | PsdFn::Inv) {
            let threshold = n as f64 * rtol * scale;
            if low <= threshold || scale == 0.0 {
                return Err(Error::SingularOperand { smallest: low, threshold });
            }
        }
    }
    Ok(apply(&e, f))
}

pub(crate) fn apply(e: &HermEig, f: PsdFn) -> CMatrix {
    e.reconstruct_with(|x| {
        let x = x.max(0.0);
        match f {
            PsdFn::Sqrt => x.sqrt(),
            PsdFn::InvSqrt => 1.0 / x.sqrt(),
            PsdFn::Inv => 1.0 / x,
        }
    })
}

/// `T = U |T|` with `U` unitary and `|T| = (T^*T)^{1/2}`.
#[derive(Debug, Clone)]
pub struct PolarPair {
    pub unitary: CMatrix,
    pub positive: CMatrix,
}

/// Polar decomposition of a square matrix.
///
/// On the range of `|M|` the unitary is `M |M|^{-1}`. On `ker |M|` it maps the
/// canonical basis of `ker |M|` to the canonical basis of `ker |M^*|`, both
/// produced by Gram–Schmidt over the standard basis in ascending index order;
/// this makes the result reproducible whenever `M` is singular.
pub fn polar(m: &CMatrix, rtol: f64) -> Result<PolarPair> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!("polar needs a square matrix, got {}x{}", m.rows(), m.cols())));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(PolarPair { unitary: CMatrix::zeros(0, 0), positive: CMatrix::zeros(0, 0) });
    }
    let s = svd(m)?;
    let u = s.u.expect("left vectors requested");
    let top = s.sigma[0];
    let rank = s.sigma.iter().filter(|&&x| x > rtol * top && x > 0.0).count();

    let mut positive = CMatrix::zeros(n, n);
    for k in 0..n {
        let vk = s.v.col(k);
        let sk = s.sigma[k];
        for i in 0..n {
            for j in 0..n {
                positive[(i, j)] += vk[i] * vk[j].conj() * sk;
            }
        }
    }
    positive = positive.hermitian_part();

    let mut unitary = CMatrix::zeros(n, n);
    for k in 0..rank {
        let (uk, vk) = (u.col(k), s.v.col(k));
        for i in 0..n {
            for j in 0..n {
                unitary[(i, j)] += uk[i] * vk[j].conj();
            }
        }
    }
    if rank < n {
        let range_in: Vec<Vec<Complex64>> = (0..rank).map(|k| s.v.col(k)).collect();
        let range_out: Vec<Vec<Complex64>> = (0..rank).map(|k| u.col(k)).collect();
        let ker_in = canonical_complement(&range_in, n);
        let ker_out = canonical_complement(&range_out, n);
        for (g, f) in ker_in.iter().zip(&ker_out) {
            for i in 0..n {
                for j in 0..n {
                    unitary[(i, j)] += f[i] * g[j].conj();
                }
            }
        }
    }
    Ok(PolarPair { unitary, positive })
}

/// Canonical orthonormal basis of the orthogonal complement of an orthonormal
/// family, via Gram–Schmidt over the standard basis.
fn canonical_complement(family: &[Vec<Complex64>], n: usize) -> Vec<Vec<Complex64>> {
    let k = n - family.len();
    // Project each standard vector onto the complement, then canonicalize
    // through the same routine used for kernels.
    let mut raw: Vec<Vec<Complex64>> = Vec::new();
    let mut acc = family.to_vec();
    for i in 0..n {
        if raw.len() == k {
            break;
        }
        let r = residual_after(&unit_vector(n, i), &acc);
        let rn = vnorm(&r);
        if rn > 1e-6 {
            let w: Vec<Complex64> = r.iter().map(|z| z / rn).collect();
            acc.push(w.clone());
            raw.push(w);
        }
    }
    canonical_basis(&raw)
}
