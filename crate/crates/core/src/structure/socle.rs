//! Matrix algebra generated by the legs, its radical, and the socle of the
//! carrier (the sum of all irreducible submodules).

use num_complex::Complex64;

use crate::algebra::PModule;
use crate::error::Result;
use crate::linalg::kernel::canonical_basis;
use crate::linalg::{hermitian_eig, kernel_basis, svd_right, CMatrix};

/// Relative threshold for accepting a new algebra element during closure.
const CLOSURE_TOL: f64 = 1e-8;
/// Singular values of the trace form between the rank threshold and this
/// fraction of the largest one make the rank decision fragile.
const GRAY_ZONE: f64 = 1e-5;

/// Frobenius-orthonormal basis of the unital algebra generated by `gens`.
pub fn generated_algebra(gens: &[CMatrix]) -> Vec<CMatrix> {
    let d = gens[0].rows();
    let mut basis: Vec<CMatrix> = vec![CMatrix::identity(d).scale_re(1.0 / (d as f64).sqrt())];
    let mut next = 0;
    while next < basis.len() && basis.len() < d * d {
        let x = basis[next].clone();
        next += 1;
        for g in gens {
            let y = g.matmul(&x);
            // Relative to ‖g‖‖x‖ rather than ‖y‖, so a product that is pure
            // rounding noise is never normalized into a new direction.
            let scale = g.norm_fro() * x.norm_fro();
            let mut r = y;
            for _ in 0..2 {
                for b in &basis {
                    let c = b.inner(&r);
                    r = r - b.scale(c);
                }
            }
            let nr = r.norm_fro();
            if nr > CLOSURE_TOL * scale {
                basis.push(r.scale_re(1.0 / nr));
            }
        }
    }
    basis
}

/// Basis of the radical `{x ∈ 𝒜 : tr(xy) = 0 for all y ∈ 𝒜}` of the algebra
/// spanned by `basis`, and whether every singular value of the trace form is
/// clearly on one side of the rank threshold.
pub fn radical(basis: &[CMatrix], rtol: f64) -> Result<(Vec<CMatrix>, bool)> {
    let n = basis.len();
    let mut t = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = trace_of_product(&basis[i], &basis[j]);
            t[(i, j)] = v;
            t[(j, i)] = v;
        }
    }
    let sigma = svd_right(&t)?.sigma;
    let top = sigma[0];
    let clear = sigma.iter().all(|&x| x <= rtol * top || x >= GRAY_ZONE * top);
    let ker = kernel_basis(&t, rtol)?;
    let rad = ker
        .iter()
        .map(|c| {
            let d = basis[0].rows();
            let mut x = CMatrix::zeros(d, d);
            for (ci, bi) in c.iter().zip(basis) {
                x = x + bi.scale(*ci);
            }
            x
        })
        .collect();
    Ok((rad, clear))
}

fn trace_of_product(x: &CMatrix, y: &CMatrix) -> Complex64 {
    let d = x.rows();
    let mut s = Complex64::new(0.0, 0.0);
    for i in 0..d {
        for k in 0..d {
            s += x[(i, k)] * y[(k, i)];
        }
    }
    s
}

/// The socle as an isometry (canonical basis) together with the dimension of
/// the generated algebra.
#[derive(Debug, Clone)]
pub struct Socle {
    pub isometry: CMatrix,
    pub algebra_dim: usize,
    pub radical_dim: usize,
    /// The rank decision behind the radical had a clear margin.
    pub certified: bool,
}

/// Sum of all minimal leg-invariant subspaces: the common kernel of the
/// radical of the algebra generated by the legs.
pub fn socle(m: &PModule, rtol: f64) -> Result<Socle> {
    let d = m.dim();
    let alg = generated_algebra(m.legs());
    let (rad, certified) = radical(&alg, rtol)?;
    let isometry = if rad.is_empty() {
        CMatrix::identity(d)
    } else {
        // The stacked radical elements are nilpotent; their common kernel is
        // read off the Gram matrix Σ J^*J, which is Hermitian.
        let mut g = CMatrix::zeros(d, d);
        for j in &rad {
            g = g + j.adjoint_mul(j);
        }
        let e = hermitian_eig(&g.hermitian_part(), 1.0)?;
        let top = e.values.last().copied().unwrap_or(0.0).max(f64::MIN_POSITIVE);
        let cols: Vec<Vec<Complex64>> =
            (0..d).filter(|&k| e.values[k] <= rtol * top).map(|k| e.vectors.col(k)).collect();
        CMatrix::from_columns(d, &canonical_basis(&cols))
    };
    Ok(Socle { isometry, algebra_dim: alg.len(), radical_dim: rad.len(), certified })
}

/// Irreducibility by Burnside's theorem: the legs generate all of `M_d`.
pub fn is_irreducible(m: &PModule) -> bool {
    generated_algebra(m.legs()).len() == m.dim() * m.dim()
}
