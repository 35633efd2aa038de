use super::matrix::CMatrix;

/// Kronecker product with the index convention `(i, j) ↦ i·cols(N) + j`
/// (zero-based), so `(M⊗N)(e_i⊗e_j) = M e_i ⊗ N e_j`.
pub fn kron(m: &CMatrix, n: &CMatrix) -> CMatrix {
    let (mr, mc, nr, nc) = (m.rows(), m.cols(), n.rows(), n.cols());
    let mut out = CMatrix::zeros(mr * nr, mc * nc);
    for i in 0..mr {
        for j in 0..mc {
            let a = m[(i, j)];
            if a.re == 0.0 && a.im == 0.0 {
                continue;
            }
            for k in 0..nr {
                for l in 0..nc {
                    out[(i * nr + k, j * nc + l)] = a * n[(k, l)];
                }
            }
        }
    }
    out
}

/// Permutation matrix of the flip `C^a ⊗ C^b → C^b ⊗ C^a`.
pub fn flip_permutation(a: usize, b: usize) -> CMatrix {
    let mut p = CMatrix::zeros(a * b, a * b);
    for i in 0..a {
        for j in 0..b {
            p[(j * a + i, i * b + j)] = super::matrix::ONE;
        }
    }
    p
}

/// Unitary `(C^{d1} ⊕ C^{d2}) ⊗ C^{e} → (C^{d1}⊗C^e) ⊕ (C^{d2}⊗C^e)`.
///
/// With the Kronecker convention above this ordering already coincides, so
/// the right-distributive shuffle is the identity; the left-distributive one
/// (`C^e ⊗ (C^{d1} ⊕ C^{d2})`) is a genuine permutation.
pub fn left_distributive_shuffle(e: usize, d1: usize, d2: usize) -> CMatrix {
    let d = d1 + d2;
    let mut p = CMatrix::zeros(e * d, e * d);
    for i in 0..e {
        for j in 0..d {
            let src = i * d + j;
            let dst = if j < d1 { i * d1 + j } else { e * d1 + i * d2 + (j - d1) };
            p[(dst, src)] = super::matrix::ONE;
        }
    }
    p
}
