//! Intertwiner spaces, with and without the adjoint relations.

use crate::algebra::PModule;
use crate::error::{Error, Result};
use crate::linalg::{commutation_kernel, CMatrix};

fn check_arity(m: &PModule, mt: &PModule) -> Result<()> {
    if m.arity() != mt.arity() {
        return Err(Error::ShapeMismatch(format!("arity {} vs {}", m.arity(), mt.arity())));
    }
    Ok(())
}

/// Frobenius-orthonormal basis of `{X : X L_k = L̃_k X}` (`X` is d̃×d).
pub fn intertwiner_basis(m: &PModule, mt: &PModule, rtol: f64) -> Result<Vec<CMatrix>> {
    check_arity(m, mt)?;
    let pairs: Vec<(CMatrix, CMatrix)> = mt.legs().iter().cloned().zip(m.legs().iter().cloned()).collect();
    commutation_kernel(&pairs, rtol)
}

/// Intertwiners that also intertwine the adjoints: `X L_k^* = L̃_k^* X`.
/// Any unitary equivalence lies in this space.
pub fn star_intertwiner_basis(m: &PModule, mt: &PModule, rtol: f64) -> Result<Vec<CMatrix>> {
    check_arity(m, mt)?;
    let mut pairs: Vec<(CMatrix, CMatrix)> = mt.legs().iter().cloned().zip(m.legs().iter().cloned()).collect();
    pairs.extend(mt.legs().iter().map(CMatrix::adjoint).zip(m.legs().iter().map(CMatrix::adjoint)));
    commutation_kernel(&pairs, rtol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{atomic_module, AtomicLabel};
    use num_complex::Complex64 as C;

    #[test]
    fn schur_on_atomic() {
        let m = atomic_module(&AtomicLabel::new("01", C::new(1.0, 0.0)).unwrap());
        let b = intertwiner_basis(&m, &m, 1e-9).unwrap();
        assert_eq!(b.len(), 1);
        assert!((&b[0] - &CMatrix::identity(2).scale_re(std::f64::consts::FRAC_1_SQRT_2)).norm_fro() < 1e-12);
    }

    #[test]
    fn axis_modules_do_not_intertwine() {
        let x = PModule::scalar(C::new(1.0, 0.0), C::new(0.0, 0.0));
        let y = PModule::scalar(C::new(0.0, 0.0), C::new(1.0, 0.0));
        assert!(intertwiner_basis(&x, &y, 1e-9).unwrap().is_empty());
    }

    #[test]
    fn unit_embeds_into_non_full_example() {
        let s = 2f64.sqrt();
        let a = CMatrix::from_real(2, 2, &[s, s, s - 2.0, s + 2.0]).scale_re(0.25);
        let b = CMatrix::from_real(2, 2, &[s + 2.0, s - 2.0, s, s]).scale_re(0.25);
        let m = PModule::pair(a, b).unwrap();
        let basis = intertwiner_basis(&PModule::unit(), &m, 1e-9).unwrap();
        assert_eq!(basis.len(), 1);
        let x = &basis[0];
        assert!((x[(0, 0)] - x[(1, 0)]).norm() < 1e-12);
        // The adjoint relations rule this embedding out: the module is not full.
        assert!(star_intertwiner_basis(&PModule::unit(), &m, 1e-9).unwrap().is_empty());
    }
}
