//! Weighted cyclic shift (GP) modules and their fusion rule.

use num_complex::Complex64;

use super::words::{least_rotation_by, primitive_period, rotate_left};
use crate::algebra::{PModule, ScalarModule};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

/// Entries `(a_k, b_k)` on the unit 3-sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct GpVector {
    pub entries: Vec<ScalarModule>,
}

impl GpVector {
    pub fn new(entries: Vec<ScalarModule>) -> Self {
        GpVector { entries }
    }

    pub fn from_pairs(pairs: &[(Complex64, Complex64)]) -> Self {
        GpVector { entries: pairs.iter().map(|&(a, b)| ScalarModule::new(a, b)).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// No entry has a vanishing leg.
    pub fn invertible(&self) -> bool {
        self.entries.iter().all(ScalarModule::is_diffuse)
    }

    /// Largest deviation of an entry from the unit sphere.
    pub fn residual(&self) -> f64 {
        self.entries.iter().map(ScalarModule::residual).fold(0.0, f64::max)
    }

    pub fn rotated(&self, k: usize) -> GpVector {
        GpVector { entries: rotate_left(&self.entries, k % self.len().max(1)) }
    }

    /// `self` repeated `times` times.
    pub fn repeated(&self, times: usize) -> GpVector {
        GpVector { entries: (0..times).flat_map(|_| self.entries.iter().copied()).collect() }
    }

    /// Entrywise distance, infinite for different lengths.
    pub fn distance(&self, other: &GpVector) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.entries.iter().zip(&other.entries).map(|(x, y)| x.distance(y)).fold(0.0, f64::max)
    }
}

/// `A e_i = a_i e_{i+1}`, `B e_i = b_i e_{i+1}` with indices modulo the length.
pub fn gp_module(z: &GpVector) -> Result<PModule> {
    let d = z.len();
    if d == 0 {
        return Err(Error::InvalidArgument("empty GP vector".into()));
    }
    let mut a = CMatrix::zeros(d, d);
    let mut b = CMatrix::zeros(d, d);
    for (i, e) in z.entries.iter().enumerate() {
        a[((i + 1) % d, i)] = e.a;
        b[((i + 1) % d, i)] = e.b;
    }
    PModule::pair(a, b)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Fusion of two invertible GP vectors of lengths `r` and `s`: with
/// `l = lcm(r, s)` and `h = hcf(r, s)`, returns `h` vectors
/// `y_k[t] = z^{l/r}[t] ⊠ z̃^{l/s}[t + k]` for `k = 0..h`.
pub fn gp_fuse(z: &GpVector, zt: &GpVector) -> Result<Vec<GpVector>> {
    if z.is_empty() || zt.is_empty() {
        return Err(Error::InvalidArgument("empty GP vector".into()));
    }
    if !z.invertible() || !zt.invertible() {
        return Err(Error::NotInvertible("GP vectors must have all entries off the unit axes".into()));
    }
    let (r, s) = (z.len(), zt.len());
    let h = gcd(r, s);
    let l = r / h * s;
    let zd = z.repeated(l / r);
    let ze = zt.repeated(l / s);
    (0..h)
        .map(|k| {
            let shifted = ze.rotated(k);
            let entries =
                zd.entries.iter().zip(&shifted.entries).map(|(x, y)| x.boxtimes(y)).collect::<Result<Vec<_>>>()?;
            Ok(GpVector::new(entries))
        })
        .collect()
}

fn entry_cmp(x: &ScalarModule, y: &ScalarModule) -> std::cmp::Ordering {
    x.a.re
        .total_cmp(&y.a.re)
        .then(x.a.im.total_cmp(&y.a.im))
        .then(x.b.re.total_cmp(&y.b.re))
        .then(x.b.im.total_cmp(&y.b.im))
}

/// Least rotation under the order on `(Re a, Im a, Re b, Im b)` and whether
/// the vector is aperiodic (not a repetition of a shorter vector).
pub fn gp_canonical(z: &GpVector) -> (GpVector, bool) {
    let k = least_rotation_by(&z.entries, entry_cmp);
    let aperiodic = primitive_period(&z.entries) == z.len();
    (z.rotated(k), aperiodic)
}
