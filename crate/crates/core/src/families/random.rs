//! Seeded samplers for the classes `M` and `N` and for GP vectors.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gp::GpVector;
use crate::algebra::{ModuleClass, PModule, ScalarModule};
use crate::error::{Error, Result};
use crate::linalg::random::random_unitary;
use crate::linalg::CMatrix;

/// Eigenvalue moduli of the first leg stay in `[ε, 1 − ε]`.
pub const SAMPLER_MARGIN: f64 = 0.05;

/// `A = W diag(c) W^*` with `ε ≤ |c_i| ≤ 1 − ε` and `B = V (I − A^*A)^{1/2}`.
///
/// For class `M`, `zero_eigs` of the `c_i` are set to zero so that the first
/// leg is singular; class `N` rejects a nonzero `zero_eigs`.
pub fn random_module(d: usize, class: ModuleClass, seed: u64, zero_eigs: usize) -> Result<PModule> {
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be at least 1".into()));
    }
    if zero_eigs > d || (class == ModuleClass::N && zero_eigs > 0) {
        return Err(Error::InvalidArgument(format!("cannot place {zero_eigs} zero eigenvalues in a class {class} sample of dimension {d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = random_unitary(d, &mut rng);
    let v = random_unitary(d, &mut rng);
    let c: Vec<Complex64> = (0..d)
        .map(|i| {
            let r = rng.gen_range(SAMPLER_MARGIN..=1.0 - SAMPLER_MARGIN);
            let phi = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
            if i < zero_eigs {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::from_polar(r, phi)
            }
        })
        .collect();
    let s: Vec<f64> = c.iter().map(|z| (1.0 - z.norm_sqr()).sqrt()).collect();
    let a = CMatrix::from_diag(&c).conjugate_by(&w);
    let b = v.matmul(&CMatrix::from_real_diag(&s).conjugate_by(&w));
    PModule::pair(a, b)
}

/// Invertible GP vector: each entry has `|a|` uniform in `[ε, 1 − ε]` and
/// independent uniform phases.
pub fn random_gp_vector<R: Rng + ?Sized>(len: usize, rng: &mut R) -> GpVector {
    let entries = (0..len)
        .map(|_| {
            let r = rng.gen_range(SAMPLER_MARGIN..=1.0 - SAMPLER_MARGIN);
            let pa = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
            let pb = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
            ScalarModule::new(Complex64::from_polar(r, pa), Complex64::from_polar((1.0 - r * r).sqrt(), pb))
        })
        .collect();
    GpVector::new(entries)
}
