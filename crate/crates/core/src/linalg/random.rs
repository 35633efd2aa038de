//! Seeded random matrices.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::kernel::orthonormalize;
use super::matrix::CMatrix;

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Entries drawn from the standard complex Gaussian.
pub fn random_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    let data = (0..rows * cols).map(|_| gaussian(rng)).collect();
    CMatrix::from_vec(rows, cols, data).expect("finite by construction")
}

/// `(G + G^*)/2` for a Gaussian `G`.
pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    random_matrix(n, n, rng).hermitian_part()
}

/// Gram–Schmidt on the columns of a Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    loop {
        let g = random_matrix(n, n, rng);
        let q = orthonormalize(&g.columns(), 1e-8);
        if q.len() == n {
            return CMatrix::from_columns(n, &q);
        }
    }
}

/// Uniform point of the unit sphere in `C^n`.
pub fn random_unit_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..n).map(|_| gaussian(rng)).collect();
    let nv = super::matrix::vnorm(&v);
    v.into_iter().map(|z| z / nv).collect()
}
