//! Splitting a module into irreducible pieces through its `*`-commutant.

use std::cmp::Ordering;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::atomic::{atomic_part, diffuse_certificate};
use super::intertwiner::star_intertwiner_basis;
use super::socle::socle;
use crate::algebra::{PModule, ScalarModule};
use crate::error::{Error, Result};
use crate::families::{AtomicLabel, GpVector};
use crate::linalg::kernel::canonical_basis;
use crate::linalg::random::random_matrix;
use crate::linalg::{hermitian_eig, CMatrix};

/// Relative eigenvalue gap that separates spectral projections of the random
/// commutant element.
const CLUSTER_GAP: f64 = 1e-6;
/// Bound on `‖(I − VV^*) L V‖_F` for every emitted carrier.
pub const INVARIANCE_TOL: f64 = 1e-8;
/// Random draws per piece before it is accepted without a split.
const SPLIT_ATTEMPTS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tag {
    Atomic,
    Diffuse,
    Unknown,
}

impl Tag {
    pub fn as_str(&self) -> &'static str {
        match self {
            Tag::Atomic => "atomic",
            Tag::Diffuse => "diffuse",
            Tag::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Label {
    Atomic(AtomicLabel),
    Gp(GpVector),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Confidence {
    Certified,
    Heuristic,
}

impl Confidence {
    pub fn as_str(&self) -> &'static str {
        match self {
            Confidence::Certified => "certified",
            Confidence::Heuristic => "heuristic",
        }
    }

    pub fn and(self, other: Confidence) -> Confidence {
        if self == Confidence::Certified && other == Confidence::Certified {
            Confidence::Certified
        } else {
            Confidence::Heuristic
        }
    }
}

#[derive(Debug, Clone)]
pub struct Summand {
    /// d×k isometry onto the summand.
    pub isometry: CMatrix,
    pub tag: Tag,
    pub label: Option<Label>,
    /// Traces of the word operators of length one and two, in word order.
    pub fingerprint: Vec<Complex64>,
}

impl Summand {
    pub fn dim(&self) -> usize {
        self.isometry.cols()
    }
}

#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub summands: Vec<Summand>,
    pub residual_dimension: usize,
    pub p_dimension: usize,
    pub confidence: Confidence,
    pub seed: u64,
}

/// An irreducible piece of a `*`-decomposition.
#[derive(Debug, Clone)]
pub(crate) struct Piece {
    pub isometry: CMatrix,
    /// The piece's own `*`-commutant is one-dimensional.
    pub irreducible: bool,
}

/// Orthogonal decomposition into pieces invariant under the legs and their
/// adjoints, by recursive spectral splitting with seeded random Hermitian
/// elements of the `*`-commutant.
pub(crate) fn star_split(m: &PModule, seed: u64, rtol: f64) -> Result<Vec<Piece>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = m.dim();
    let mut todo = vec![CMatrix::identity(d)];
    let mut done = Vec::new();
    while let Some(v) = todo.pop() {
        let r = m.restrict(&v);
        let comm = star_intertwiner_basis(&r, &r, rtol)?;
        if comm.len() <= 1 {
            done.push(Piece { isometry: v, irreducible: comm.len() == 1 });
            continue;
        }
        let k = v.cols();
        let mut split = None;
        for _ in 0..SPLIT_ATTEMPTS {
            let g = random_matrix(comm.len(), 1, &mut rng);
            let mut x = CMatrix::zeros(k, k);
            for (i, c) in comm.iter().enumerate() {
                x = x + c.scale(g[(i, 0)]);
            }
            let h = (&x + &x.adjoint()).scale_re(0.5);
            let e = hermitian_eig(&h, 1e-6)?;
            let spread = (e.values[k - 1] - e.values[0]).max(f64::MIN_POSITIVE);
            let mut clusters = Vec::new();
            let mut start = 0;
            for j in 1..=k {
                if j == k || e.values[j] - e.values[j - 1] > CLUSTER_GAP * spread.max(h.norm_fro()) {
                    clusters.push((start..j).collect::<Vec<_>>());
                    start = j;
                }
            }
            if clusters.len() > 1 {
                split = Some((e.vectors, clusters));
                break;
            }
        }
        let Some((vecs, clusters)) = split else {
            done.push(Piece { isometry: v, irreducible: false });
            continue;
        };
        for c in clusters.into_iter().rev() {
            let sub = v.matmul(&vecs.select_cols(&c));
            let sub = CMatrix::from_columns(d, &canonical_basis(&sub.columns()));
            let defect = m.invariance_defect(&sub);
            if defect > INVARIANCE_TOL {
                return Err(Error::NotFullSuspected(format!(
                    "split subspace of dimension {} is not leg-invariant (defect {defect:.3e})",
                    sub.cols()
                )));
            }
            todo.push(sub);
        }
    }
    Ok(done)
}

/// All words over `0..arity` of length `1..=max_len`, shortest first, in
/// lexicographic order within a length.
pub(crate) fn words_up_to(arity: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(level.len() * arity);
        for w in &level {
            for x in 0..arity {
                let mut w2 = w.clone();
                w2.push(x);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

pub(crate) fn trace_fingerprint(m: &PModule, max_len: usize) -> Vec<Complex64> {
    words_up_to(m.arity(), max_len).iter().map(|w| m.word_operator(w).trace()).collect()
}

/// Lexicographic order on fingerprints after rounding to nine decimals, so
/// that equivalent summands compare equal.
pub(crate) fn fingerprint_cmp(a: &[Complex64], b: &[Complex64]) -> Ordering {
    let key = |z: &Complex64| ((z.re * 1e9).round() as i64, (z.im * 1e9).round() as i64);
    a.iter().map(key).cmp(b.iter().map(key))
}

fn leading_row(v: &CMatrix) -> usize {
    (0..v.rows()).find(|&i| (0..v.cols()).any(|j| v[(i, j)].norm() > 1e-8)).unwrap_or(0)
}

/// Tag and label of an irreducible summand of an arity-2 module.
fn classify_piece(r: &PModule, rtol: f64) -> Result<(Tag, Option<Label>, Confidence)> {
    if r.arity() != 2 {
        return Ok((Tag::Unknown, None, Confidence::Certified));
    }
    let k = r.dim();
    if k == 1 {
        let s = ScalarModule::from_module(r)?;
        let axis = 1e-9;
        return Ok(if s.b.norm() <= axis {
            (Tag::Atomic, Some(Label::Atomic(AtomicLabel::new("0", s.a / s.a.norm())?)), Confidence::Certified)
        } else if s.a.norm() <= axis {
            (Tag::Atomic, Some(Label::Atomic(AtomicLabel::new("1", s.b / s.b.norm())?)), Confidence::Certified)
        } else {
            (Tag::Diffuse, Some(Label::Gp(GpVector::new(vec![s]))), Confidence::Certified)
        });
    }
    let found = atomic_part(r, 2 * k, rtol)?;
    if let [only] = found.as_slice() {
        if only.dim() == k {
            return Ok((Tag::Atomic, Some(Label::Atomic(only.label.clone())), Confidence::Certified));
        }
    }
    if diffuse_certificate(r, 2 * k)?.is_some() {
        return Ok((Tag::Diffuse, None, Confidence::Certified));
    }
    Ok((Tag::Unknown, None, Confidence::Heuristic))
}

/// Irreducible decomposition of a full module.
///
/// Fails with `NotFullSuspected` when the module has a nonzero residual
/// subspace, since then the commutant no longer describes its submodules.
pub fn decompose_full(m: &PModule, seed: u64, rtol: f64) -> Result<DecompositionReport> {
    let d = m.dim();
    let soc = socle(m, rtol)?;
    if soc.isometry.cols() < d {
        return Err(Error::NotFullSuspected(format!(
            "the complete submodule has dimension {} < {d}",
            soc.isometry.cols()
        )));
    }
    let pieces = star_split(m, seed, rtol)?;
    let mut confidence = if soc.certified { Confidence::Certified } else { Confidence::Heuristic };
    let mut summands = Vec::with_capacity(pieces.len());
    for p in pieces {
        if !p.irreducible {
            confidence = Confidence::Heuristic;
        }
        let r = m.restrict(&p.isometry);
        let (tag, label, c) = classify_piece(&r, rtol)?;
        confidence = confidence.and(c);
        summands.push(Summand { fingerprint: trace_fingerprint(&r, 2), isometry: p.isometry, tag, label });
    }
    sort_summands(&mut summands);
    Ok(DecompositionReport { summands, residual_dimension: 0, p_dimension: d, confidence, seed })
}

pub(crate) fn sort_summands(summands: &mut [Summand]) {
    summands.sort_by(|a, b| {
        a.dim()
            .cmp(&b.dim())
            .then_with(|| fingerprint_cmp(&a.fingerprint, &b.fingerprint))
            .then_with(|| leading_row(&a.isometry).cmp(&leading_row(&b.isometry)))
    });
}
