//! Dual modules and the evaluation/coevaluation checks.

use num_complex::Complex64;

use super::fusion::boxtimes;
use super::module::{smallest_singular_value, PModule};
use crate::error::{Error, Result};
use crate::linalg::{flip_permutation, kron, polar, CMatrix};

/// `(Ū_A |B̄|, Ū_B |Ā|)` where the bar is entrywise conjugation and the polar
/// data is unique because both legs are invertible.
pub fn dual_module(m: &PModule, rtol: f64) -> Result<PModule> {
    m.require_arity2()?;
    let d = m.dim();
    for k in 0..2 {
        let s = smallest_singular_value(m.leg(k));
        if s <= d as f64 * rtol {
            return Err(Error::NotInvertible(format!("leg {k} has smallest singular value {s:.3e}")));
        }
    }
    let pa = polar(m.a(), rtol)?;
    let pb = polar(m.b(), rtol)?;
    let a = pa.unitary.conj().matmul(&pb.positive.conj());
    let b = pb.unitary.conj().matmul(&pa.positive.conj());
    PModule::pair(a, b)
}

/// Numbers extracted from the rigidity maps of a module and its dual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualityReport {
    /// `ev ∘ flip ∘ coev`.
    pub quantum_dim: f64,
    /// The scalar `λ` with `ev ∘ L_k(m^*⊠m) = λ·ev` for both legs.
    pub ev_factor: Complex64,
    /// Worst fit of that single scalar over the legs.
    pub ev_residual: f64,
    /// The same check for `coev` into `m⊠m^*`.
    pub coev_factor: Complex64,
    pub coev_residual: f64,
    /// Largest deviation of the two zig-zag composites from the identity.
    pub zigzag_residual: f64,
}

/// `ev(e_i ⊗ e_j) = δ_ij` on `C^d ⊗ C^d`, as a `1×d²` row.
pub fn ev_row(d: usize) -> CMatrix {
    coev_column(d).transpose()
}

/// `coev(1) = Σ e_i ⊗ e_i`, as a `d²×1` column.
pub fn coev_column(d: usize) -> CMatrix {
    let mut c = CMatrix::zeros(d * d, 1);
    for i in 0..d {
        c[(i * d + i, 0)] = Complex64::new(1.0, 0.0);
    }
    c
}

fn fit_scalar(lhs: &[CMatrix], base: &CMatrix) -> (Complex64, f64) {
    let nb = base.inner(base);
    let lambdas: Vec<Complex64> = lhs.iter().map(|x| base.inner(x) / nb).collect();
    let lambda = lambdas.iter().sum::<Complex64>() / lhs.len() as f64;
    let norm = base.norm_fro();
    let res = lhs.iter().map(|x| (x - &base.scale(lambda)).norm_fro() / norm).fold(0.0, f64::max);
    (lambda, res)
}

pub fn duality_check(m: &PModule, rtol: f64) -> Result<DualityReport> {
    let dual = dual_module(m, rtol)?;
    let d = m.dim();
    let ev = ev_row(d);
    let coev = coev_column(d);

    let left = boxtimes(&dual, m, rtol)?;
    let lhs: Vec<CMatrix> = left.legs().iter().map(|l| ev.matmul(l)).collect();
    let (ev_factor, ev_residual) = fit_scalar(&lhs, &ev);

    let right = boxtimes(m, &dual, rtol)?;
    let rhs: Vec<CMatrix> = right.legs().iter().map(|l| l.matmul(&coev)).collect();
    let (coev_factor, coev_residual) = fit_scalar(&rhs, &coev);

    let id = CMatrix::identity(d);
    let z1 = kron(&id, &ev).matmul(&kron(&coev, &id));
    let z2 = kron(&ev, &id).matmul(&kron(&id, &coev));
    let zigzag_residual = (z1 - &id).norm_fro().max((z2 - &id).norm_fro());

    let qd = ev.matmul(&flip_permutation(d, d)).matmul(&coev)[(0, 0)];

    let worst = ev_residual.max(coev_residual);
    if !(worst <= rtol.max(1e-12) * 1e3) {
        return Err(Error::NotIntertwiner { residual: worst });
    }
    Ok(DualityReport { quantum_dim: qd.re, ev_factor, ev_residual, coev_factor, coev_residual, zigzag_residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::ScalarModule;
    use num_complex::Complex64 as C;

    #[test]
    fn dual_of_unit_is_unit() {
        let d = dual_module(&PModule::unit(), 1e-9).unwrap();
        assert!(d.max_leg_distance(&PModule::unit()) < 1e-15);
    }

    #[test]
    fn dual_of_scalar_is_group_inverse() {
        let s = ScalarModule::new(C::from_polar(0.6, 0.4), C::from_polar(0.8, -2.0));
        let d = ScalarModule::from_module(&dual_module(&s.to_module(), 1e-9).unwrap()).unwrap();
        assert!(d.distance(&s.inverse().unwrap()) < 1e-14);
    }

    #[test]
    fn singular_leg_rejected() {
        let m = PModule::scalar(C::new(1.0, 0.0), C::new(0.0, 0.0));
        assert_eq!(dual_module(&m, 1e-9).unwrap_err().code(), "NotInvertible");
    }

    #[test]
    fn unit_checks() {
        let r = duality_check(&PModule::unit(), 1e-9).unwrap();
        assert_eq!(r.zigzag_residual, 0.0);
        assert!((r.quantum_dim - 1.0).abs() < 1e-15);
        assert!((r.ev_factor - C::new(std::f64::consts::FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
    }
}
