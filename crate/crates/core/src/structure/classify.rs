//! Split of a module into its complete, atomic and diffuse parts.

use num_complex::Complex64;

use super::atomic::{atomic_part, diffuse_certificate};
use super::decompose::{Confidence, INVARIANCE_TOL};
use super::socle::socle;
use crate::algebra::PModule;
use crate::error::{Error, Result};
use crate::families::AtomicLabel;
use crate::linalg::kernel::{canonical_basis, orthonormalize, residual_after};
use crate::linalg::CMatrix;

/// The complete submodule: the span of all irreducible submodules.
pub fn complete_submodule(m: &PModule, rtol: f64) -> Result<CMatrix> {
    Ok(socle(m, rtol)?.isometry)
}

#[derive(Debug, Clone)]
pub struct PartsReport {
    pub p_dimension: usize,
    pub complete_dimension: usize,
    pub atomic_dimension: usize,
    pub diffuse_dimension: usize,
    pub residual_dimension: usize,
    pub atomic_labels: Vec<AtomicLabel>,
    pub complete: CMatrix,
    pub atomic: CMatrix,
    pub diffuse: CMatrix,
    /// Word length at which the diffuse part lost all norm-preserving words.
    pub diffuse_level: Option<usize>,
    pub confidence: Confidence,
}

/// Complete, atomic and diffuse parts, with atoms searched up to `max_len`.
pub fn classify_parts(m: &PModule, max_len: usize, rtol: f64) -> Result<PartsReport> {
    m.require_arity2()?;
    let d = m.dim();
    let soc = socle(m, rtol)?;
    let complete = soc.isometry.clone();
    let atoms = atomic_part(m, max_len, rtol)?;
    let mut vecs: Vec<Vec<Complex64>> = Vec::new();
    for a in &atoms {
        vecs.extend(a.isometry.columns());
    }
    let atomic_basis = canonical_basis(&orthonormalize(&vecs, 1e-8));
    let atomic = CMatrix::from_columns(d, &atomic_basis);

    let rest: Vec<Vec<Complex64>> = complete.columns().iter().map(|c| residual_after(c, &atomic_basis)).collect();
    let diffuse_basis = canonical_basis(&orthonormalize(&rest, 1e-6));
    let diffuse = CMatrix::from_columns(d, &diffuse_basis);
    let mut confidence = if soc.certified { Confidence::Certified } else { Confidence::Heuristic };
    let mut diffuse_level = None;
    if diffuse.cols() > 0 {
        let defect = m.invariance_defect(&diffuse);
        if defect > INVARIANCE_TOL {
            return Err(Error::NotFullSuspected(format!(
                "diffuse part is not leg-invariant (defect {defect:.3e})"
            )));
        }
        diffuse_level = diffuse_certificate(&m.restrict(&diffuse), max_len.max(2 * diffuse.cols()))?;
        if diffuse_level.is_none() {
            confidence = Confidence::Heuristic;
        }
    }
    Ok(PartsReport {
        p_dimension: d,
        complete_dimension: complete.cols(),
        atomic_dimension: atomic.cols(),
        diffuse_dimension: diffuse.cols(),
        residual_dimension: d - complete.cols(),
        atomic_labels: atoms.into_iter().map(|a| a.label).collect(),
        complete,
        atomic,
        diffuse,
        diffuse_level,
        confidence,
    })
}
