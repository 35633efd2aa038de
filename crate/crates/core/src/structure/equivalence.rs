//! Unitary equivalence of modules with a witness when one exists.

use super::decompose::{star_split, trace_fingerprint, words_up_to};
use super::intertwiner::star_intertwiner_basis;
use crate::algebra::PModule;
use crate::error::Result;
use crate::linalg::CMatrix;

/// Longest word whose trace is compared before any linear solve.
const TRACE_WORD_CAP: usize = 8;
/// Cap on the number of words in the trace screen.
const TRACE_WORD_BUDGET: usize = 4096;
/// Bound on `max_k ‖U L_k U^* − L̃_k‖_F` for an accepted witness.
pub const WITNESS_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Undecided,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Undecided => "undecided",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Equivalence {
    pub verdict: Verdict,
    /// Unitary `U` with `U L_k U^* = L̃_k` when the verdict is `True`.
    pub witness: Option<CMatrix>,
    /// Which test settled the verdict.
    pub reason: String,
}

impl Equivalence {
    fn no(reason: impl Into<String>) -> Self {
        Equivalence { verdict: Verdict::False, witness: None, reason: reason.into() }
    }
}

/// Longest word length used in the trace screen for arity `n` and dimension `d`.
pub(crate) fn trace_word_len(arity: usize, d: usize) -> usize {
    let mut l = (2 * d).clamp(1, TRACE_WORD_CAP);
    while l > 1 && arity.checked_pow(l as u32).map_or(true, |c| c > TRACE_WORD_BUDGET) {
        l -= 1;
    }
    l
}

fn witness_residual(u: &CMatrix, m: &PModule, mt: &PModule) -> f64 {
    m.legs().iter().zip(mt.legs()).map(|(l, lt)| (l.conjugate_by(u) - lt).norm_fro()).fold(0.0, f64::max)
}

/// Decides whether `mt` is unitarily equivalent to `m`.
pub fn equivalent(m: &PModule, mt: &PModule, rtol: f64, seed: u64) -> Result<Equivalence> {
    if m.arity() != mt.arity() {
        return Ok(Equivalence::no("arity differs"));
    }
    if m.dim() != mt.dim() {
        return Ok(Equivalence::no("dimension differs"));
    }
    let d = m.dim();
    let len = trace_word_len(m.arity(), d);
    let tol = 1e-7 * d as f64;
    for w in words_up_to(m.arity(), len) {
        let (a, b) = (m.word_operator(&w).trace(), mt.word_operator(&w).trace());
        if (a - b).norm() > tol {
            let word: String = w.iter().map(|x| x.to_string()).collect();
            return Ok(Equivalence::no(format!("trace of word {word} differs")));
        }
    }

    let hom = star_intertwiner_basis(m, mt, rtol)?;
    if hom.is_empty() {
        return Ok(Equivalence::no("no intertwiner commuting with adjoints"));
    }
    let end = star_intertwiner_basis(m, m, rtol)?;
    if end.len() == 1 {
        // Irreducible: any nonzero *-intertwiner is a multiple of a unitary.
        let x = &hom[0];
        let xx = x.adjoint_mul(x);
        let c = xx.trace().re / d as f64;
        if c > 0.0 && (&xx - &CMatrix::identity(d).scale_re(c)).norm_fro() <= 1e-8 * c {
            let u = x.scale_re(1.0 / c.sqrt());
            let res = witness_residual(&u, m, mt);
            if res <= WITNESS_TOL {
                return Ok(Equivalence { verdict: Verdict::True, witness: Some(u), reason: "irreducible intertwiner".into() });
            }
        }
        return Ok(Equivalence { verdict: Verdict::Undecided, witness: None, reason: "intertwiner is not unitary".into() });
    }

    // Reducible: split both sides and pair isomorphic pieces.
    let p = star_split(m, seed, rtol)?;
    let pt = star_split(mt, seed, rtol)?;
    let certified = p.iter().chain(&pt).all(|x| x.irreducible);
    let mut used = vec![false; pt.len()];
    let mut u = CMatrix::zeros(d, d);
    for piece in &p {
        let r = m.restrict(&piece.isometry);
        let fp = trace_fingerprint(&r, 2);
        let mut matched = false;
        for (j, other) in pt.iter().enumerate() {
            if used[j] || other.isometry.cols() != piece.isometry.cols() {
                continue;
            }
            let rt = mt.restrict(&other.isometry);
            let fpt = trace_fingerprint(&rt, 2);
            if fp.iter().zip(&fpt).any(|(a, b)| (a - b).norm() > tol) {
                continue;
            }
            let sub = equivalent(&r, &rt, rtol, seed)?;
            if let (Verdict::True, Some(w)) = (sub.verdict, sub.witness) {
                u = u + other.isometry.matmul(&w).matmul(&piece.isometry.adjoint());
                used[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(if certified {
                Equivalence::no("an irreducible summand has no partner")
            } else {
                Equivalence { verdict: Verdict::Undecided, witness: None, reason: "summand matching failed".into() }
            });
        }
    }
    let res = witness_residual(&u, m, mt);
    if res <= WITNESS_TOL {
        Ok(Equivalence { verdict: Verdict::True, witness: Some(u), reason: "summands matched".into() })
    } else {
        Ok(Equivalence { verdict: Verdict::Undecided, witness: None, reason: format!("assembled witness residual {res:.3e}") })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{atomic_module, random_module, AtomicLabel};
    use crate::linalg::random::random_unitary;
    use crate::ModuleClass;
    use num_complex::Complex64 as C;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn conjugate_is_equivalent() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for d in 1..=4 {
            let m = random_module(d, ModuleClass::N, d as u64, 0).unwrap();
            let u = random_unitary(d, &mut rng);
            let mt = m.conjugate_by(&u);
            let e = equivalent(&m, &mt, 1e-9, 0).unwrap();
            assert_eq!(e.verdict, Verdict::True, "d={d}: {}", e.reason);
            assert!(witness_residual(e.witness.as_ref().unwrap(), &m, &mt) < 1e-8);
        }
    }

    #[test]
    fn reducible_conjugate_is_equivalent() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let a = atomic_module(&AtomicLabel::new("01", C::new(0.0, 1.0)).unwrap());
        let m = a.direct_sum(&PModule::unit()).unwrap().direct_sum(&PModule::unit()).unwrap();
        let u = random_unitary(4, &mut rng);
        let mt = m.conjugate_by(&u);
        let e = equivalent(&m, &mt, 1e-9, 2).unwrap();
        assert_eq!(e.verdict, Verdict::True, "{}", e.reason);
    }

    #[test]
    fn distinct_modules_are_not() {
        let a = atomic_module(&AtomicLabel::new("01", C::new(1.0, 0.0)).unwrap());
        let b = atomic_module(&AtomicLabel::new("01", C::new(-1.0, 0.0)).unwrap());
        assert_eq!(equivalent(&a, &b, 1e-9, 0).unwrap().verdict, Verdict::False);
        assert_eq!(equivalent(&a, &PModule::unit(), 1e-9, 0).unwrap().verdict, Verdict::False);
    }

    #[test]
    fn word_length_respects_budget() {
        assert_eq!(trace_word_len(2, 2), 4);
        assert_eq!(trace_word_len(2, 10), 8);
        assert_eq!(trace_word_len(4, 10), 6);
    }
}
