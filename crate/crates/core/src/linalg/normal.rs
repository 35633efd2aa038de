//! Eigendecomposition of normal matrices through two Hermitian problems.
//!
//! The Hermitian part `(N + N^*)/2` is diagonalized first; inside each cluster
//! of (numerically) equal eigenvalues the skew part `(N − N^*)/2i` is
//! diagonalized on the cluster subspace. For a normal matrix the two parts
//! commute, so the combined basis diagonalizes `N`.

use num_complex::Complex64;

use super::eig::hermitian_eig;
use super::matrix::CMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct NormalEig {
    pub values: Vec<Complex64>,
    pub vectors: CMatrix,
}

/// Eigenpairs of a normal matrix. Eigenvalues whose real parts agree within
/// `gap` (relative to `‖N‖_F`) are separated through the skew part.
pub fn normal_eig(n: &CMatrix, gap: f64) -> Result<NormalEig> {
    if !n.is_square() {
        return Err(Error::ShapeMismatch("normal_eig needs a square matrix".into()));
    }
    let d = n.rows();
    let scale = n.norm_fro().max(f64::MIN_POSITIVE);
    let h = n.hermitian_part();
    let s = (n - &n.adjoint()).scale(Complex64::new(0.0, -0.5));
    let eh = hermitian_eig(&h, 1.0)?;
    let mut vectors: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    let mut start = 0;
    while start < d {
        let mut end = start + 1;
        while end < d && eh.values[end] - eh.values[end - 1] <= gap * scale {
            end += 1;
        }
        let q = eh.vectors.block(0, d, start, end);
        if end - start == 1 {
            vectors.push(q.col(0));
        } else {
            let es = hermitian_eig(&s.compress(&q).hermitian_part(), 1.0)?;
            let rot = q.matmul(&es.vectors);
            vectors.extend(rot.columns());
        }
        start = end;
    }
    let vectors = CMatrix::from_columns(d, &vectors);
    let values = (0..d)
        .map(|j| {
            let v = vectors.col(j);
            super::matrix::vdot(&v, &n.mul_vec(&v))
        })
        .collect();
    Ok(NormalEig { values, vectors })
}
