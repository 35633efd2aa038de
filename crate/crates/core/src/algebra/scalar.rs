//! One-dimensional modules and the Lie group structure on the diffuse ones.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use super::module::PModule;
use crate::error::{Error, Result};

/// The module `(a, b, C)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarModule {
    pub a: Complex64,
    pub b: Complex64,
}

/// Coordinates `(u, v, t) ∈ S¹ × S¹ × R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupCoords {
    pub u: Complex64,
    pub v: Complex64,
    pub t: f64,
}

impl GroupCoords {
    /// Group law: multiply the circle factors, add the real one.
    pub fn compose(&self, other: &GroupCoords) -> GroupCoords {
        GroupCoords { u: self.u * other.u, v: self.v * other.v, t: self.t + other.t }
    }
}

/// Argument in `(−π, π]`.
pub fn arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a == -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        a
    }
}

/// `e^{i·Arg z}`, taken as 1 at the origin.
pub fn phase(z: Complex64) -> Complex64 {
    if z.norm() == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::from_polar(1.0, arg(z))
    }
}

impl ScalarModule {
    pub fn new(a: Complex64, b: Complex64) -> Self {
        ScalarModule { a, b }
    }

    pub fn unit() -> Self {
        let r = Complex64::new(FRAC_1_SQRT_2, 0.0);
        ScalarModule { a: r, b: r }
    }

    pub fn residual(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() - 1.0).abs()
    }

    /// Both legs nonzero: the diffuse irreducible case.
    pub fn is_diffuse(&self) -> bool {
        self.a.norm() != 0.0 && self.b.norm() != 0.0
    }

    pub fn to_module(&self) -> PModule {
        PModule::scalar(self.a, self.b)
    }

    /// Reads a one-dimensional arity-2 module.
    pub fn from_module(m: &PModule) -> Result<Self> {
        m.require_arity2()?;
        if m.dim() != 1 {
            return Err(Error::ShapeMismatch(format!("expected a 1-dimensional module, got dimension {}", m.dim())));
        }
        Ok(ScalarModule { a: m.a()[(0, 0)], b: m.b()[(0, 0)] })
    }

    /// Scalar fusion `(aã/k, bb̃/k)` with `k² = |aã|² + |bb̃|²`.
    pub fn boxtimes(&self, other: &ScalarModule) -> Result<ScalarModule> {
        let (pa, pb) = (self.a * other.a, self.b * other.b);
        let k2 = pa.norm_sqr() + pb.norm_sqr();
        if k2 == 0.0 {
            return Err(Error::KernelOverlap { smallest: 0.0 });
        }
        let k = k2.sqrt();
        Ok(ScalarModule { a: pa / k, b: pb / k })
    }

    /// Group inverse `(|b|e^{−i Arg a}, |a|e^{−i Arg b})`.
    pub fn inverse(&self) -> Result<ScalarModule> {
        if !self.is_diffuse() {
            return Err(Error::OnUnitAxis(format!("a={}, b={}", self.a, self.b)));
        }
        Ok(ScalarModule { a: phase(self.a).conj() * self.b.norm(), b: phase(self.b).conj() * self.a.norm() })
    }

    pub fn distance(&self, other: &ScalarModule) -> f64 {
        (self.a - other.a).norm().max((self.b - other.b).norm())
    }

    /// Inverse of [`scalar_coords_iso`]: `u = e^{i Arg a}`, `v = e^{i Arg b}`,
    /// `t = log((1 − |a|²)/|a|²)`.
    pub fn coords(&self) -> Result<GroupCoords> {
        if !self.is_diffuse() {
            return Err(Error::OnUnitAxis(format!("a={}, b={}", self.a, self.b)));
        }
        let a2 = self.a.norm_sqr();
        Ok(GroupCoords { u: phase(self.a), v: phase(self.b), t: ((1.0 - a2) / a2).ln() })
    }
}

/// `(u, v, t) ↦ (u/√(e^t+1), √(e^t/(e^t+1))·v)`.
pub fn scalar_coords_iso(c: &GroupCoords) -> ScalarModule {
    // Written with the logistic function to stay accurate for large |t|.
    let s = 1.0 / (1.0 + (-c.t).exp());
    ScalarModule { a: c.u * (1.0 - s).sqrt(), b: c.v * s.sqrt() }
}

/// Scalar `⋆` on the unit square: `pq / √(p²q² + (1−p²)(1−q²))`.
pub fn star_scalar(p: f64, q: f64) -> Result<f64> {
    let den = p * p * q * q + (1.0 - p * p) * (1.0 - q * q);
    if den <= 0.0 {
        return Err(Error::SingularDenominator { smallest: den });
    }
    Ok(p * q / den.sqrt())
}
