//! Singular value decomposition by one-sided (Hestenes) Jacobi.
//!
//! Tall inputs are first reduced to a square triangular factor by Householder
//! QR; the right singular vectors and singular values of `R` equal those of the
//! input. Singular values come out with small relative error, which is what the
//! kernel and rank decisions downstream rely on.

use num_complex::Complex64;

use super::matrix::{vdot, vnorm, CMatrix, ZERO};
use crate::error::{Error, Result};

const SVD_MAX_SWEEPS: usize = 80;

/// `M = U diag(σ) V^*` with singular values descending. `u` is only
/// meaningful on columns with nonzero singular value.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: Option<CMatrix>,
    pub sigma: Vec<f64>,
    pub v: CMatrix,
}

/// Full SVD including left singular vectors, for square or tall input.
pub fn svd(m: &CMatrix) -> Result<Svd> {
    jacobi_svd(m.clone(), true)
}

/// Right singular vectors and singular values only; accepts any shape.
pub fn svd_right(m: &CMatrix) -> Result<Svd> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows > cols {
        let r = householder_r(m);
        jacobi_svd(r, false)
    } else if rows < cols {
        let mut padded = CMatrix::zeros(cols, cols);
        padded.set_block(0, 0, m);
        jacobi_svd(padded, false)
    } else {
        jacobi_svd(m.clone(), false)
    }
}

fn jacobi_svd(a: CMatrix, want_u: bool) -> Result<Svd> {
    let (rows, n) = (a.rows(), a.cols());
    // Work on columns as contiguous vectors.
    let mut cols: Vec<Vec<Complex64>> = a.columns();
    let mut v: Vec<Vec<Complex64>> = (0..n).map(|j| super::matrix::unit_vector(n, j)).collect();
    let eps = 1e-15;
    let total: f64 = cols.iter().flatten().map(|z| z.norm_sqr()).sum();
    // Columns below this squared norm are numerically zero and left alone.
    let floor = (eps * eps) * total;
    let mut converged = n < 2;
    for _ in 0..SVD_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma = vdot(&cols[p], &cols[q]);
                let g = gamma.norm();
                if g == 0.0 || g <= eps * (alpha * beta).sqrt() || alpha.min(beta) <= floor {
                    continue;
                }
                rotated = true;
                // Rotate the phase of column q so that <a_p, a_q> is real.
                let ph = gamma.conj() / g;
                for z in cols[q].iter_mut() {
                    *z *= ph;
                }
                for z in v[q].iter_mut() {
                    *z *= ph;
                }
                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta == 0.0 { 1.0 } else { zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt()) };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..rows {
                    let xp = cols[p][i];
                    let xq = cols[q][i];
                    cols[p][i] = xp * c - xq * s;
                    cols[q][i] = xp * s + xq * c;
                }
                for i in 0..n {
                    let xp = v[p][i];
                    let xq = v[q][i];
                    v[p][i] = xp * c - xq * s;
                    v[q][i] = xp * s + xq * c;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(format!("one-sided Jacobi SVD after {SVD_MAX_SWEEPS} sweeps")));
    }
    let sig: Vec<f64> = cols.iter().map(|c| vnorm(c)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| sig[j].total_cmp(&sig[i]).then(i.cmp(&j)));
    let sigma: Vec<f64> = order.iter().map(|&k| sig[k]).collect();
    let vm = CMatrix::from_columns(n, &order.iter().map(|&k| v[k].clone()).collect::<Vec<_>>());
    let u = want_u.then(|| {
        let ucols: Vec<Vec<Complex64>> = order
            .iter()
            .map(|&k| {
                if sig[k] > 0.0 {
                    cols[k].iter().map(|z| z / sig[k]).collect()
                } else {
                    vec![ZERO; rows]
                }
            })
            .collect();
        CMatrix::from_columns(rows, &ucols)
    });
    Ok(Svd { u, sigma, v: vm })
}

/// Upper-triangular factor `R` (n×n) of a Householder QR of a tall matrix.
fn householder_r(m: &CMatrix) -> CMatrix {
    let (rows, n) = (m.rows(), m.cols());
    let mut a = m.clone();
    for k in 0..n {
        let x: Vec<Complex64> = (k..rows).map(|i| a[(i, k)]).collect();
        let xn = vnorm(&x);
        if xn == 0.0 {
            continue;
        }
        let x0 = x[0];
        let phase = if x0.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        // v = x + phase·‖x‖·e1 avoids cancellation.
        let mut hv = x.clone();
        hv[0] += phase * xn;
        let hn = vnorm(&hv);
        if hn == 0.0 {
            continue;
        }
        for z in hv.iter_mut() {
            *z /= hn;
        }
        // A[k.., k..] -= 2 v (v^* A)
        for j in k..n {
            let mut dot = ZERO;
            for (t, i) in (k..rows).enumerate() {
                dot += hv[t].conj() * a[(i, j)];
            }
            let f = dot * 2.0;
            for (t, i) in (k..rows).enumerate() {
                let upd = hv[t] * f;
                a[(i, j)] -= upd;
            }
        }
    }
    a.block(0, n, 0, n)
}
