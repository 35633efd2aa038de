//! Fusion of two-dimensional diagonal/anti-diagonal modules.

use num_complex::Complex64;

use crate::algebra::{PModule, ScalarModule};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

/// `(diag(a1, a2), [[0, b2], [b1, 0]])` with all four scalars nonzero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct D2 {
    pub a1: Complex64,
    pub a2: Complex64,
    pub b1: Complex64,
    pub b2: Complex64,
}

impl D2 {
    pub fn new(a1: Complex64, a2: Complex64, b1: Complex64, b2: Complex64) -> Self {
        D2 { a1, a2, b1, b2 }
    }

    /// Reads the four scalars, rejecting anything that is not of the shape
    /// within `tol` or has a vanishing scalar.
    pub fn from_module(m: &PModule, tol: f64) -> Result<D2> {
        if m.arity() != 2 || m.dim() != 2 {
            return Err(Error::NotD2Shape(format!("need a 2-dimensional arity-2 module, got dimension {} arity {}", m.dim(), m.arity())));
        }
        let (a, b) = (m.a(), m.b());
        let stray = a[(0, 1)].norm().max(a[(1, 0)].norm()).max(b[(0, 0)].norm()).max(b[(1, 1)].norm());
        if stray > tol {
            return Err(Error::NotD2Shape(format!("off-pattern entry of size {stray:.3e}")));
        }
        let d = D2 { a1: a[(0, 0)], a2: a[(1, 1)], b1: b[(1, 0)], b2: b[(0, 1)] };
        if [d.a1, d.a2, d.b1, d.b2].iter().any(|z| z.norm() <= tol) {
            return Err(Error::NotD2Shape("all four scalars must be nonzero".into()));
        }
        Ok(d)
    }

    pub fn to_module(&self) -> PModule {
        let a = CMatrix::from_diag(&[self.a1, self.a2]);
        let mut b = CMatrix::zeros(2, 2);
        b[(1, 0)] = self.b1;
        b[(0, 1)] = self.b2;
        PModule::pair(a, b).expect("2x2 legs")
    }

    /// When `a1 = a2` (within `tol`) the module splits as `(a, β) ⊕ (a, −β)`
    /// with `β` the principal square root of `b1·b2`; the pair is sorted.
    pub fn split(&self, tol: f64) -> Option<[ScalarModule; 2]> {
        if (self.a1 - self.a2).norm() > tol {
            return None;
        }
        let a = (self.a1 + self.a2) * 0.5;
        let beta = (self.b1 * self.b2).sqrt();
        let mut pair = [ScalarModule::new(a, beta), ScalarModule::new(a, -beta)];
        pair.sort_by(|x, y| x.b.re.total_cmp(&y.b.re).then(x.b.im.total_cmp(&y.b.im)));
        Some(pair)
    }
}

/// One block of a `D₂ ⊠ D₂` product and its scalar split, if any.
#[derive(Debug, Clone, PartialEq)]
pub struct D2Block {
    pub block: D2,
    /// Carrier of the block inside `C² ⊗ C²`, as a 4×2 isometry.
    pub carrier: CMatrix,
    pub split: Option<[ScalarModule; 2]>,
}

/// Closed-form `m ⊠ m̃` for two `D₂` modules: the blocks on
/// `span{e1⊗e1, e2⊗e2}` and `span{e1⊗e2, e2⊗e1}`.
pub fn d2_fuse(m: &D2, mt: &D2, tol: f64) -> [D2Block; 2] {
    let a = [m.a1, m.a2];
    let b = [m.b1, m.b2];
    let at = [mt.a1, mt.a2];
    let bt = [mt.b1, mt.b2];
    let k = |i: usize, j: usize| (a[i].norm_sqr() * at[j].norm_sqr() + b[i].norm_sqr() * bt[j].norm_sqr()).sqrt().recip();
    let aa = |i: usize, j: usize| a[i] * at[j] * k(i, j);
    let bb = |i: usize, j: usize| b[i] * bt[j] * k(i, j);

    let first = D2::new(aa(0, 0), aa(1, 1), bb(0, 0), bb(1, 1));
    let second = D2::new(aa(0, 1), aa(1, 0), bb(0, 1), bb(1, 0));
    let carrier = |p: usize, q: usize| {
        let mut v = CMatrix::zeros(4, 2);
        v[(p, 0)] = Complex64::new(1.0, 0.0);
        v[(q, 1)] = Complex64::new(1.0, 0.0);
        v
    };
    [
        D2Block { block: first, carrier: carrier(0, 3), split: first.split(tol) },
        D2Block { block: second, carrier: carrier(1, 2), split: second.split(tol) },
    ]
}
