//! Irreducible atomic modules `m_{w,z}` and their absorption of diffuse
//! modules.

use std::fmt;

use num_complex::Complex64;

use super::words::{is_primitive, least_rotation, lyndon_words};
use crate::algebra::module::smallest_singular_value;
use crate::algebra::scalar::arg;
use crate::algebra::PModule;
use crate::error::{Error, Result};
use crate::linalg::{normal_eig, polar, CMatrix};

/// A prime binary word, stored as its least rotation, and a unit phase.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomicLabel {
    word: String,
    phase: Complex64,
}

impl AtomicLabel {
    /// Rejects empty, non-binary and periodic words, and phases off the unit
    /// circle by more than `1e−9`. The word is replaced by its least rotation;
    /// the phase is unchanged, since rotating the word only relabels the
    /// carrier basis.
    pub fn new(word: &str, phase: Complex64) -> Result<Self> {
        let bytes = word.as_bytes();
        if bytes.is_empty() || bytes.iter().any(|c| *c != b'0' && *c != b'1') || !is_primitive(bytes) {
            return Err(Error::NotPrime(word.to_string()));
        }
        if (phase.norm() - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidArgument(format!("phase {phase} is not of unit modulus")));
        }
        let canon = String::from_utf8(least_rotation(bytes)).expect("ascii");
        Ok(AtomicLabel { word: canon, phase })
    }

    pub fn word(&self) -> &str {
        &self.word
    }

    pub fn phase(&self) -> Complex64 {
        self.phase
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn digits(&self) -> Vec<usize> {
        self.word.bytes().map(|c| (c - b'0') as usize).collect()
    }

    /// Same word and phases within `tol`.
    pub fn matches(&self, other: &AtomicLabel, tol: f64) -> bool {
        self.word == other.word && (self.phase - other.phase).norm() <= tol
    }
}

impl fmt::Display for AtomicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, e^{{i·{:.6}}})", self.word, arg(self.phase))
    }
}

/// `m_{w,z} = (A_w D_z, B_w D_z, C^d)` with partial shifts `A_w`, `B_w`.
pub fn atomic_module(label: &AtomicLabel) -> PModule {
    let digits = label.digits();
    let d = digits.len();
    let mut legs = [CMatrix::zeros(d, d), CMatrix::zeros(d, d)];
    for (k, &x) in digits.iter().enumerate() {
        let weight = if k == d - 1 { label.phase } else { Complex64::new(1.0, 0.0) };
        legs[x][((k + 1) % d, k)] = weight;
    }
    let [a, b] = legs;
    PModule::pair(a, b).expect("square legs")
}

/// One canonical prime word per rotation class, of exact length `d`.
pub fn prime_words(d: usize) -> Vec<String> {
    lyndon_words(d)
}

/// Labels of the summands of `m_{w,z} ⊠ m_d` for a module `m_d` with
/// invertible legs: `(w, φ_i z)` for the eigenvalues `φ_i` of
/// `V = V_{x_r}···V_{x_1}`, built from the polar unitaries of `m_d`'s legs.
/// Sorted by the argument of the phase.
pub fn atomic_diffuse_fuse(label: &AtomicLabel, md: &PModule, rtol: f64) -> Result<Vec<AtomicLabel>> {
    let v = absorption_unitary(label, md, rtol)?;
    let e = normal_eig(&v, 1e-8)?;
    let mut out: Vec<AtomicLabel> = e
        .values
        .iter()
        .map(|phi| {
            let z = phi * label.phase;
            AtomicLabel { word: label.word.clone(), phase: z / z.norm() }
        })
        .collect();
    out.sort_by(|x, y| arg(x.phase).total_cmp(&arg(y.phase)));
    Ok(out)
}

/// `V = V_{x_r}···V_{x_1}` where `V_A`, `V_B` are the polar unitaries of the
/// legs of `md`.
pub fn absorption_unitary(label: &AtomicLabel, md: &PModule, rtol: f64) -> Result<CMatrix> {
    md.require_arity2()?;
    let d = md.dim();
    for k in 0..2 {
        let s = smallest_singular_value(md.leg(k));
        if s <= d as f64 * rtol {
            return Err(Error::NotInvertible(format!("leg {k} has smallest singular value {s:.3e}")));
        }
    }
    let va = polar(md.a(), rtol)?.unitary;
    let vb = polar(md.b(), rtol)?.unitary;
    let mut v = CMatrix::identity(d);
    for x in label.digits() {
        v = if x == 0 { va.matmul(&v) } else { vb.matmul(&v) };
    }
    Ok(v)
}
