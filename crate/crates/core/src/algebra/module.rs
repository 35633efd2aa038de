//! The module type: a tuple of square legs satisfying `Σ L_k^* L_k = I`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{kron, svd_right, CMatrix};

/// A finite-dimensional module over the Pythagorean algebra (arity 2) or its
/// n-leg generalization. Legs are stored in order; for arity 2 the first leg
/// is `A` and the second is `B`.
#[derive(Clone, PartialEq)]
pub struct PModule {
    legs: Vec<CMatrix>,
}

/// Outcome of checking the Pythagorean identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Validation {
    pub pass: bool,
    pub residual: f64,
}

/// The two sampled classes: `M` (normal first leg, invertible second leg) and
/// `N` (additionally an invertible first leg).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleClass {
    M,
    N,
}

impl fmt::Display for ModuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleClass::M => "M",
            ModuleClass::N => "N",
        })
    }
}

impl PModule {
    /// Builds a module after checking shapes only. The Pythagorean identity is
    /// checked separately by [`PModule::validate`] so that callers can inspect
    /// near-miss inputs.
    pub fn new(legs: Vec<CMatrix>) -> Result<Self> {
        if legs.len() < 2 {
            return Err(Error::ShapeMismatch(format!("a module needs at least 2 legs, got {}", legs.len())));
        }
        let d = legs[0].rows();
        if d == 0 {
            return Err(Error::ShapeMismatch("legs must have positive dimension".into()));
        }
        for (k, l) in legs.iter().enumerate() {
            if l.rows() != d || l.cols() != d {
                return Err(Error::ShapeMismatch(format!(
                    "leg {k} is {}x{}, expected {d}x{d}",
                    l.rows(),
                    l.cols()
                )));
            }
            if !l.is_finite() {
                return Err(Error::NonFinite(format!("leg {k} has a non-finite entry")));
            }
        }
        Ok(PModule { legs })
    }

    /// Like [`PModule::new`] but also rejects a Pythagorean residual above `tol`.
    pub fn checked(legs: Vec<CMatrix>, tol: f64) -> Result<Self> {
        let m = Self::new(legs)?;
        let v = m.validate(tol);
        if !v.pass {
            return Err(Error::PythagoreanViolation { residual: v.residual, tol });
        }
        Ok(m)
    }

    pub fn pair(a: CMatrix, b: CMatrix) -> Result<Self> {
        Self::new(vec![a, b])
    }

    /// The one-dimensional module `(a, b, C)`.
    pub fn scalar(a: Complex64, b: Complex64) -> Self {
        PModule { legs: vec![CMatrix::scalar(a), CMatrix::scalar(b)] }
    }

    /// The tensor unit `(1/√2, 1/√2, C)`.
    pub fn unit() -> Self {
        let r = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self::scalar(r, r)
    }

    /// The arity-n scalar unit with all legs `1/√n`.
    pub fn unit_n(n: usize) -> Self {
        let r = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        PModule { legs: vec![CMatrix::scalar(r); n] }
    }

    pub fn dim(&self) -> usize {
        self.legs[0].rows()
    }

    pub fn arity(&self) -> usize {
        self.legs.len()
    }

    pub fn legs(&self) -> &[CMatrix] {
        &self.legs
    }

    pub fn leg(&self, k: usize) -> &CMatrix {
        &self.legs[k]
    }

    pub fn into_legs(self) -> Vec<CMatrix> {
        self.legs
    }

    /// First leg of an arity-2 module.
    pub fn a(&self) -> &CMatrix {
        &self.legs[0]
    }

    /// Second leg of an arity-2 module.
    pub fn b(&self) -> &CMatrix {
        &self.legs[1]
    }

    pub fn require_arity2(&self) -> Result<()> {
        match self.arity() {
            2 => Ok(()),
            n => Err(Error::ArityUnsupported(n)),
        }
    }

    /// `‖Σ L_k^* L_k − I‖_F`.
    pub fn pythagorean_residual(&self) -> f64 {
        let d = self.dim();
        let mut s = CMatrix::zeros(d, d);
        for l in &self.legs {
            s = s + l.adjoint_mul(l);
        }
        (s - CMatrix::identity(d)).norm_fro()
    }

    pub fn validate(&self, tol: f64) -> Validation {
        let residual = self.pythagorean_residual();
        Validation { pass: residual <= tol, residual }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &PModule) -> Result<PModule> {
        if self.arity() != other.arity() {
            return Err(Error::ShapeMismatch(format!(
                "direct sum of arity {} and arity {}",
                self.arity(),
                other.arity()
            )));
        }
        let legs = self.legs.iter().zip(&other.legs).map(|(l, r)| l.direct_sum(r)).collect();
        Ok(PModule { legs })
    }

    /// `U L_k U^*` for every leg.
    pub fn conjugate_by(&self, u: &CMatrix) -> PModule {
        PModule { legs: self.legs.iter().map(|l| l.conjugate_by(u)).collect() }
    }

    /// Restriction `V^* L_k V` to the range of an isometry `V`. This is a
    /// module whenever the range is leg-invariant.
    pub fn restrict(&self, v: &CMatrix) -> PModule {
        PModule { legs: self.legs.iter().map(|l| l.compress(v)).collect() }
    }

    /// `max_k ‖(I − VV^*) L_k V‖_F`: how far the range of `V` is from being
    /// leg-invariant.
    pub fn invariance_defect(&self, v: &CMatrix) -> f64 {
        self.legs
            .iter()
            .map(|l| {
                let lv = l.matmul(v);
                (&lv - &v.matmul(&v.adjoint_mul(&lv))).norm_fro()
            })
            .fold(0.0, f64::max)
    }

    /// Word operator `W_w = L_{w_last} ··· L_{w_first}`: the word is read left
    /// to right and each letter acts after the previous one.
    pub fn word_operator(&self, word: &[usize]) -> CMatrix {
        let mut w = CMatrix::identity(self.dim());
        for &x in word {
            w = self.legs[x].matmul(&w);
        }
        w
    }

    /// Kronecker product of the legs with a second module of the same arity,
    /// without any normalization.
    pub fn raw_kron_legs(&self, other: &PModule) -> Vec<CMatrix> {
        self.legs.iter().zip(&other.legs).map(|(l, r)| kron(l, r)).collect()
    }

    /// `‖AA^* − A^*A‖_F ≤ 1e−8·‖A‖_F²` for the first leg.
    pub fn first_leg_normal(&self) -> bool {
        let a = self.a();
        let comm = (a.matmul(&a.adjoint()) - a.adjoint_mul(a)).norm_fro();
        comm <= 1e-8 * a.norm_fro().powi(2)
    }

    /// Smallest singular value of leg `k` exceeds `dim·rtol`.
    pub fn leg_invertible(&self, k: usize, rtol: f64) -> bool {
        smallest_singular_value(&self.legs[k]) > self.dim() as f64 * rtol
    }

    /// Membership in the class `M` or `N` at tolerance `rtol`.
    pub fn in_class(&self, class: ModuleClass, rtol: f64) -> bool {
        if self.arity() != 2 || !self.first_leg_normal() || !self.leg_invertible(1, rtol) {
            return false;
        }
        match class {
            ModuleClass::M => true,
            ModuleClass::N => self.leg_invertible(0, rtol),
        }
    }

    /// Largest entrywise distance to another module of the same shape, or
    /// infinity when the shapes differ.
    pub fn max_leg_distance(&self, other: &PModule) -> f64 {
        if self.arity() != other.arity() || self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.legs.iter().zip(&other.legs).map(|(l, r)| (l - r).max_abs()).fold(0.0, f64::max)
    }
}

pub(crate) fn smallest_singular_value(m: &CMatrix) -> f64 {
    svd_right(m).map(|s| s.sigma.last().copied().unwrap_or(0.0)).unwrap_or(0.0)
}

impl fmt::Debug for PModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PModule").field("dim", &self.dim()).field("legs", &self.legs).finish()
    }
}

/// Parses a word over the digits `0..arity` written as a string, e.g. `"0110"`.
pub fn parse_word(s: &str, arity: usize) -> Result<Vec<usize>> {
    s.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as usize)
                .filter(|&d| d < arity)
                .ok_or_else(|| Error::InvalidArgument(format!("letter {c:?} is not a digit below {arity}")))
        })
        .collect()
}

pub fn word_to_string(w: &[usize]) -> String {
    w.iter().map(|d| char::from_digit(*d as u32, 10).unwrap_or('?')).collect()
}
