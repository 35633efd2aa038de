//! The `⋆` operation, the fusion product `⊠` and the Kawamura product `⊗_μ`.

use super::module::PModule;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, kron, polar, psd_funcalc, CMatrix, PsdFn};

/// Relative gate on the smallest eigenvalue of `K²`, scaled by `d·d̃`.
pub const KERNEL_GATE: f64 = 1e-10;

/// `P ⋆ Q = (P⊗Q)(P²⊗Q² + (I−P²)⊗(I−Q²))^{−1/2}` for positive contractions.
pub fn star(p: &CMatrix, q: &CMatrix, rtol: f64) -> Result<CMatrix> {
    for m in [p, q] {
        let e = hermitian_eig(m, rtol)?;
        let (lo, hi) = (e.values[0], e.values[e.values.len() - 1]);
        if lo < -rtol || hi > 1.0 + rtol {
            return Err(Error::NotPositive {
                eigenvalue: if lo < -rtol { lo } else { 1.0 - hi },
                bound: -rtol,
            });
        }
    }
    let (dp, dq) = (p.rows(), q.rows());
    let p2 = p.matmul(p);
    let q2 = q.matmul(q);
    let den = kron(&p2, &q2) + kron(&(CMatrix::identity(dp) - &p2), &(CMatrix::identity(dq) - &q2));
    let inv = psd_funcalc(&den.hermitian_part(), PsdFn::InvSqrt, rtol).map_err(|e| match e {
        Error::SingularOperand { smallest, .. } => Error::SingularDenominator { smallest },
        other => other,
    })?;
    Ok(kron(p, q).matmul(&inv))
}

/// `K² = A^*A ⊗ Ã^*Ã + B^*B ⊗ B̃^*B̃`.
pub fn k_squared(m: &PModule, mt: &PModule) -> CMatrix {
    let a2 = m.a().adjoint_mul(m.a());
    let b2 = m.b().adjoint_mul(m.b());
    let at2 = mt.a().adjoint_mul(mt.a());
    let bt2 = mt.b().adjoint_mul(mt.b());
    (kron(&a2, &at2) + kron(&b2, &bt2)).hermitian_part()
}

/// Fusion product `m ⊠ m̃ = ((A⊗Ã)K^{−1}, (B⊗B̃)K^{−1})`.
///
/// Fails with `KernelOverlap` when the smallest eigenvalue of `K²` is not
/// above `d·d̃·1e−10·‖K²‖`.
pub fn boxtimes(m: &PModule, mt: &PModule, rtol: f64) -> Result<PModule> {
    m.require_arity2()?;
    mt.require_arity2()?;
    let k2 = k_squared(m, mt);
    let e = hermitian_eig(&k2, rtol.max(1e-12))?;
    let n = k2.rows();
    let top = e.values[n - 1].max(0.0);
    let low = e.values[0];
    if !(low > n as f64 * KERNEL_GATE * top) || top == 0.0 {
        return Err(Error::KernelOverlap { smallest: low });
    }
    let kinv = e.reconstruct_with(|x| 1.0 / x.sqrt());
    let legs = m.raw_kron_legs(mt).into_iter().map(|l| l.matmul(&kinv)).collect();
    PModule::new(legs)
}

/// The same product assembled from polar data:
/// `((U_A⊗U_Ã)(|A|⋆|Ã|), (U_B⊗U_B̃)(|B|⋆|B̃|))`.
pub fn boxtimes_polar(m: &PModule, mt: &PModule, rtol: f64) -> Result<PModule> {
    m.require_arity2()?;
    mt.require_arity2()?;
    let mut legs = Vec::with_capacity(2);
    for k in 0..2 {
        let p = polar(m.leg(k), rtol)?;
        let q = polar(mt.leg(k), rtol)?;
        let s = star(&p.positive, &q.positive, rtol).map_err(|e| match e {
            Error::SingularDenominator { smallest } => Error::KernelOverlap { smallest },
            other => other,
        })?;
        legs.push(kron(&p.unitary, &q.unitary).matmul(&s));
    }
    PModule::new(legs)
}

/// Kawamura-style product of an arity-n and an arity-ñ module: the leg with
/// zero-based index `ñ·i + j` is `L_i ⊗ L̃_j`.
pub fn kawamura(m: &PModule, mt: &PModule) -> PModule {
    let mut legs = Vec::with_capacity(m.arity() * mt.arity());
    for l in m.legs() {
        for r in mt.legs() {
            legs.push(kron(l, r));
        }
    }
    PModule::new(legs).expect("kronecker legs are square of equal size")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::ScalarModule;
    use crate::linalg::kron::flip_permutation;
    use num_complex::Complex64 as C;

    fn r(x: f64) -> C {
        C::new(x, 0.0)
    }

    fn example_m() -> PModule {
        let s = 2f64.sqrt();
        let a = CMatrix::from_real(2, 2, &[s, s, s - 2.0, s + 2.0]).scale_re(0.25);
        let b = CMatrix::from_real(2, 2, &[s + 2.0, s - 2.0, s, s]).scale_re(0.25);
        PModule::pair(a, b).unwrap()
    }

    #[test]
    fn unit_law() {
        let m = example_m();
        let l = boxtimes(&m, &PModule::unit(), 1e-9).unwrap();
        let rr = boxtimes(&PModule::unit(), &m, 1e-9).unwrap();
        assert!(l.max_leg_distance(&m) < 1e-12);
        assert!(rr.max_leg_distance(&m) < 1e-12);
    }

    #[test]
    fn scalar_product_matches_formula() {
        let h = 0.75f64.sqrt();
        let n = PModule::scalar(r(0.5), r(h));
        let p = boxtimes(&n, &n, 1e-9).unwrap();
        let want = ScalarModule::new(r(1.0 / 10f64.sqrt()), r(3.0 / 10f64.sqrt()));
        assert!(ScalarModule::from_module(&p).unwrap().distance(&want) < 1e-14);
    }

    #[test]
    fn overlapping_kernels_rejected() {
        let x = PModule::scalar(r(0.0), r(1.0));
        let y = PModule::scalar(r(1.0), r(0.0));
        assert_eq!(boxtimes(&x, &y, 1e-9).unwrap_err().code(), "KernelOverlap");
        assert_eq!(star(&CMatrix::scalar(r(0.0)), &CMatrix::scalar(r(1.0)), 1e-9).unwrap_err().code(), "SingularDenominator");
    }

    #[test]
    fn star_unit_and_scalar() {
        let h = CMatrix::scalar(r(std::f64::consts::FRAC_1_SQRT_2));
        let q = CMatrix::from_real(2, 2, &[0.5, 0.1, 0.1, 0.3]);
        let out = star(&h, &q, 1e-9).unwrap();
        assert!((out - q).max_abs() < 1e-14);
        let s = star(&CMatrix::scalar(r(0.5)), &CMatrix::scalar(r(0.5)), 1e-9).unwrap();
        assert!((s[(0, 0)].re - 0.316227766016838).abs() < 1e-12);
    }

    #[test]
    fn polar_form_agrees() {
        let m = example_m();
        let n = PModule::scalar(r(0.5), r(0.75f64.sqrt()));
        let direct = boxtimes(&n, &m, 1e-9).unwrap();
        let via = boxtimes_polar(&n, &m, 1e-9).unwrap();
        assert!(direct.max_leg_distance(&via) < 1e-12);
    }

    #[test]
    fn flip_symmetry() {
        let m = example_m();
        let n = PModule::scalar(r(0.6), r(0.8)).direct_sum(&PModule::unit()).unwrap();
        let f = flip_permutation(2, 2);
        let lhs = boxtimes(&m, &n, 1e-9).unwrap().conjugate_by(&f);
        let rhs = boxtimes(&n, &m, 1e-9).unwrap();
        assert!(lhs.max_leg_distance(&rhs) < 1e-12);
    }

    #[test]
    fn kawamura_units() {
        let u = kawamura(&PModule::unit(), &PModule::unit());
        assert_eq!(u.arity(), 4);
        for l in u.legs() {
            assert!((l[(0, 0)] - r(0.5)).norm() < 1e-15);
        }
        assert!(u.validate(1e-15).pass);
    }

    #[test]
    fn arity_is_enforced() {
        let u4 = PModule::unit_n(4);
        assert_eq!(boxtimes(&u4, &PModule::unit(), 1e-9).unwrap_err().code(), "ArityUnsupported");
    }
}
