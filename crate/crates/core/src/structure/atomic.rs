//! Atomic vectors (norm preserved along a periodic ray) and the certificate
//! that a submodule is diffuse.

use num_complex::Complex64;

use crate::algebra::PModule;
use crate::error::Result;
use crate::families::words::{is_primitive, least_rotation};
use crate::families::AtomicLabel;
use crate::linalg::kernel::orthonormalize;
use crate::linalg::{hermitian_eig, normal_eig, svd_right, CMatrix};

/// Words whose restricted norm is at least `1 − NORM_SLACK` count as norm
/// preserving.
const NORM_SLACK: f64 = 1e-10;
/// Frontier size beyond which the diffuse search gives up.
const FRONTIER_CAP: usize = 4096;

/// An irreducible atomic submodule `m_{w,z}` found inside a module.
#[derive(Debug, Clone)]
pub struct AtomicSummand {
    pub label: AtomicLabel,
    /// Orthonormal orbit basis `η, X_{w_1}η, X_{w_2}X_{w_1}η, ...`.
    pub isometry: CMatrix,
}

fn eig_threshold(rtol: f64) -> f64 {
    10.0 * rtol.max(1e-13)
}

/// Shrinks the orthonormal columns `q` to the vectors whose norm `p` keeps.
fn keep_norm(q: &CMatrix, p: &CMatrix, thr: f64) -> Result<CMatrix> {
    if q.cols() == 0 {
        return Ok(q.clone());
    }
    let pq = p.matmul(q);
    let loss = (CMatrix::identity(q.cols()) - pq.adjoint_mul(&pq)).hermitian_part();
    let e = hermitian_eig(&loss, 1.0)?;
    let keep: Vec<usize> = (0..q.cols()).filter(|&k| e.values[k] <= thr).collect();
    Ok(q.matmul(&e.vectors.select_cols(&keep)))
}

/// Atomic summands `m_{w,z}` for canonical prime words `w` with
/// `|w| ≤ max_len`. The search walks the binary tree of words and prunes every
/// prefix that preserves the norm of no vector.
pub fn atomic_part(m: &PModule, max_len: usize, rtol: f64) -> Result<Vec<AtomicSummand>> {
    m.require_arity2()?;
    let d = m.dim();
    let thr = eig_threshold(rtol);
    let mut found: Vec<AtomicSummand> = Vec::new();
    let mut span: Vec<Vec<Complex64>> = Vec::new();
    // Depth-first over (word, prefix operator, norm-preserved subspace).
    let mut stack: Vec<(Vec<usize>, CMatrix, CMatrix)> = vec![(Vec::new(), CMatrix::identity(d), CMatrix::identity(d))];
    while let Some((word, p, q)) = stack.pop() {
        if word.len() == max_len {
            continue;
        }
        for x in (0..2).rev() {
            let p2 = m.leg(x).matmul(&p);
            let q2 = keep_norm(&q, &p2, thr)?;
            if q2.cols() == 0 {
                continue;
            }
            let mut w2 = word.clone();
            w2.push(x);
            if is_primitive(&w2) && least_rotation(&w2) == w2 {
                for s in periodic_summands(m, &w2, &p2, &q2, thr)? {
                    let fresh = orthonormalize(
                        &span.iter().cloned().chain(s.isometry.columns()).collect::<Vec<_>>(),
                        1e-6,
                    );
                    if fresh.len() == span.len() + s.dim() {
                        span = fresh;
                        found.push(s);
                    }
                }
            }
            stack.push((w2, p2, q2));
        }
    }
    found.sort_by(|a, b| {
        a.label
            .len()
            .cmp(&b.label.len())
            .then(a.label.word().cmp(b.label.word()))
            .then(crate::algebra::scalar::arg(a.label.phase()).total_cmp(&crate::algebra::scalar::arg(b.label.phase())))
    });
    Ok(found)
}

impl AtomicSummand {
    pub fn dim(&self) -> usize {
        self.isometry.cols()
    }
}

/// Vectors whose norm is kept along the whole ray `w^∞`, split into the
/// eigenvectors of the (unitary) word operator on that subspace.
fn periodic_summands(m: &PModule, w: &[usize], pw: &CMatrix, q: &CMatrix, thr: f64) -> Result<Vec<AtomicSummand>> {
    let d = m.dim();
    let l = w.len();
    let mut q = q.clone();
    let mut p = pw.clone();
    // Extend period by period until a full period no longer shrinks the space.
    for _ in 0..=d {
        let before = q.cols();
        for &x in w {
            p = m.leg(x).matmul(&p);
            q = keep_norm(&q, &p, thr)?;
            if q.cols() == 0 {
                return Ok(Vec::new());
            }
        }
        if q.cols() == before {
            break;
        }
    }
    let ws = m.word_operator(w).compress(&q);
    let e = normal_eig(&ws, 1e-8)?;
    let mut out = Vec::new();
    for (j, phi) in e.values.iter().enumerate() {
        let eta = q.mul_vec(&e.vectors.col(j));
        let mut orbit = vec![eta.clone()];
        let mut cur = eta;
        for &x in &w[..l - 1] {
            cur = m.leg(x).mul_vec(&cur);
            orbit.push(cur.clone());
        }
        let basis = orthonormalize(&orbit, 1e-6);
        if basis.len() != l {
            continue;
        }
        let z = phi / phi.norm();
        let digits: String = w.iter().map(|&x| if x == 0 { '0' } else { '1' }).collect();
        if let Ok(label) = AtomicLabel::new(&digits, z) {
            out.push(AtomicSummand { label, isometry: CMatrix::from_columns(d, &basis) });
        }
    }
    Ok(out)
}

/// Smallest word length `n` such that every word of length `n` acts on the
/// module with norm below one, which forces every ray to decay. `None` when
/// no such length is found within `max_len` or the search frontier overflows.
pub fn diffuse_certificate(m: &PModule, max_len: usize) -> Result<Option<usize>> {
    let d = m.dim();
    if d == 0 {
        return Ok(Some(0));
    }
    let mut frontier: Vec<CMatrix> = vec![CMatrix::identity(d)];
    for n in 1..=max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for leg in m.legs() {
                let w2 = leg.matmul(w);
                let top = svd_right(&w2)?.sigma[0];
                if top >= 1.0 - NORM_SLACK {
                    next.push(w2);
                }
            }
        }
        if next.is_empty() {
            return Ok(Some(n));
        }
        if next.len() > FRONTIER_CAP {
            return Ok(None);
        }
        frontier = next;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ModuleClass;
    use crate::families::{atomic_module, random_module};
    use num_complex::Complex64 as C;

    #[test]
    fn one_dimensional_axis_module() {
        let m = PModule::scalar(C::new(1.0, 0.0), C::new(0.0, 0.0));
        let found = atomic_part(&m, 2, 1e-9).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].label.word(), "0");
        assert!((found[0].label.phase() - C::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn recovers_atomic_labels() {
        let z = C::from_polar(1.0, 0.9);
        let label = AtomicLabel::new("011", z).unwrap();
        let m = atomic_module(&label).direct_sum(&PModule::unit()).unwrap();
        let found = atomic_part(&m, 8, 1e-9).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].label.matches(&label, 1e-10));
        assert_eq!(found[0].dim(), 3);
        assert!(m.invariance_defect(&found[0].isometry) < 1e-10);
    }

    #[test]
    fn class_n_has_no_atoms() {
        let m = random_module(3, ModuleClass::N, 5, 0).unwrap();
        assert!(atomic_part(&m, 6, 1e-9).unwrap().is_empty());
        assert_eq!(diffuse_certificate(&m, 6).unwrap(), Some(1));
    }

    #[test]
    fn atomic_modules_are_not_certified_diffuse() {
        let m = atomic_module(&AtomicLabel::new("01", C::new(1.0, 0.0)).unwrap());
        assert_eq!(diffuse_certificate(&m, 6).unwrap(), None);
    }
}
