//! C ABI over `pmod`.
//!
//! Modules cross the boundary as opaque `PmodModule` handles. Every fallible
//! call returns a `PmodStatus`; on failure the message is kept per thread and
//! read back with `pmod_last_error_message`. Matrix entries are passed as
//! interleaved `re, im` doubles, legs one after another, each row-major, so a
//! module of arity `n` and dimension `d` occupies `2 n d^2` doubles.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_complex::Complex64;
use pmod::algebra::{boxtimes, dual_module, kawamura};
use pmod::families::{atomic_module, gp_module, random_module, AtomicLabel, GpVector};
use pmod::io::{parse_module_file, serialize_module, ModuleMeta};
use pmod::linalg::matrix::CMatrix;
use pmod::structure::{equivalent, Verdict};
use pmod::{Error, ModuleClass, PModule};

/// Opaque module handle. Release with `pmod_module_free`.
pub struct PmodModule(PModule);

/// Result of every fallible call. `PMOD_STATUS_OK` is zero; the others mirror
/// the library error codes, followed by ABI-level failures.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmodStatus {
    Ok = 0,
    ShapeMismatch = 1,
    NonFinite = 2,
    NotHermitian = 3,
    NotPositive = 4,
    NoConvergence = 5,
    SingularOperand = 6,
    SingularDenominator = 7,
    KernelOverlap = 8,
    NotInvertible = 9,
    NotIntertwiner = 10,
    OnUnitAxis = 11,
    ArityUnsupported = 12,
    NotFullSuspected = 13,
    NotPrime = 14,
    NotD2Shape = 15,
    ParseError = 16,
    ShapeError = 17,
    PythagoreanViolation = 18,
    InvalidArgument = 19,
    NullPointer = 100,
    InvalidUtf8 = 101,
    BufferTooSmall = 102,
    Panic = 103,
}

/// Outcome of `pmod_equivalent`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmodVerdict {
    False = 0,
    True = 1,
    Undecided = 2,
}

/// Sampling class for `pmod_random_module`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmodClass {
    M = 0,
    N = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> PmodStatus {
    match e {
        Error::ShapeMismatch(_) => PmodStatus::ShapeMismatch,
        Error::NonFinite(_) => PmodStatus::NonFinite,
        Error::NotHermitian { .. } => PmodStatus::NotHermitian,
        Error::NotPositive { .. } => PmodStatus::NotPositive,
        Error::NoConvergence(_) => PmodStatus::NoConvergence,
        Error::SingularOperand { .. } => PmodStatus::SingularOperand,
        Error::SingularDenominator { .. } => PmodStatus::SingularDenominator,
        Error::KernelOverlap { .. } => PmodStatus::KernelOverlap,
        Error::NotInvertible(_) => PmodStatus::NotInvertible,
        Error::NotIntertwiner { .. } => PmodStatus::NotIntertwiner,
        Error::OnUnitAxis(_) => PmodStatus::OnUnitAxis,
        Error::ArityUnsupported(_) => PmodStatus::ArityUnsupported,
        Error::NotFullSuspected(_) => PmodStatus::NotFullSuspected,
        Error::NotPrime(_) => PmodStatus::NotPrime,
        Error::NotD2Shape(_) => PmodStatus::NotD2Shape,
        Error::Parse(_) => PmodStatus::ParseError,
        Error::Shape(_) => PmodStatus::ShapeError,
        Error::PythagoreanViolation { .. } => PmodStatus::PythagoreanViolation,
        Error::InvalidArgument(_) => PmodStatus::InvalidArgument,
    }
}

struct Fail(PmodStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null() -> Fail {
    Fail(PmodStatus::NullPointer, "null pointer argument".into())
}

/// Runs `f`, recording failures and turning panics into `PMOD_STATUS_PANIC`.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PmodStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            PmodStatus::Ok
        }
        Ok(Err(Fail(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            PmodStatus::Panic
        }
    }
}

unsafe fn module<'a>(p: *const PmodModule) -> Result<&'a PModule, Fail> {
    p.as_ref().map(|m| &m.0).ok_or_else(null)
}

unsafe fn emit(out: *mut *mut PmodModule, m: PModule) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(PmodModule(m)));
    Ok(())
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|e| Fail(PmodStatus::InvalidUtf8, e.to_string()))
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn pmod_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a module from `2 * arity * dim * dim` doubles and checks
/// `Σ L_k^* L_k = I` to `tol`.
///
/// # Safety
/// `data` must point to that many readable doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pmod_module_new(
    arity: usize,
    dim: usize,
    data: *const f64,
    tol: f64,
    out: *mut *mut PmodModule,
) -> PmodStatus {
    guard(|| {
        if data.is_null() {
            return Err(null());
        }
        if arity < 2 || dim == 0 {
            return Err(Error::Shape(format!("arity {arity} and dimension {dim} must be at least 2 and 1")).into());
        }
        let raw = std::slice::from_raw_parts(data, 2 * arity * dim * dim);
        let legs = raw
            .chunks_exact(2 * dim * dim)
            .map(|leg| {
                let entries = leg.chunks_exact(2).map(|z| Complex64::new(z[0], z[1])).collect();
                CMatrix::from_vec(dim, dim, entries)
            })
            .collect::<pmod::Result<Vec<_>>>()?;
        emit(out, PModule::checked(legs, tol)?)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `m` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pmod_module_free(m: *mut PmodModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Dimension of the module, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pmod_module_dim(m: *const PmodModule) -> usize {
    m.as_ref().map_or(0, |m| m.0.dim())
}

/// Number of legs, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pmod_module_arity(m: *const PmodModule) -> usize {
    m.as_ref().map_or(0, |m| m.0.arity())
}

/// `‖Σ L_k^* L_k − I‖_F`, or NaN for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pmod_module_residual(m: *const PmodModule) -> f64 {
    m.as_ref().map_or(f64::NAN, |m| m.0.pythagorean_residual())
}

/// Copies leg `k` into `out` as `2 * dim * dim` doubles.
///
/// # Safety
/// `m` must be a live handle and `out` must hold `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn pmod_module_leg(m: *const PmodModule, k: usize, out: *mut f64, len: usize) -> PmodStatus {
    guard(|| {
        let m = module(m)?;
        if out.is_null() {
            return Err(null());
        }
        if k >= m.arity() {
            return Err(Error::InvalidArgument(format!("leg {k} out of range for arity {}", m.arity())).into());
        }
        let leg = m.leg(k).as_slice();
        if len < 2 * leg.len() {
            return Err(Fail(PmodStatus::BufferTooSmall, format!("need {} doubles, got {len}", 2 * leg.len())));
        }
        let dst = std::slice::from_raw_parts_mut(out, 2 * leg.len());
        for (pair, z) in dst.chunks_exact_mut(2).zip(leg) {
            pair[0] = z.re;
            pair[1] = z.im;
        }
        Ok(())
    })
}

/// Fusion product `m ⊠ mt`.
///
/// # Safety
/// `m` and `mt` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pmod_boxtimes(
    m: *const PmodModule,
    mt: *const PmodModule,
    rtol: f64,
    out: *mut *mut PmodModule,
) -> PmodStatus {
    guard(|| emit(out, boxtimes(module(m)?, module(mt)?, rtol)?))
}

/// Direct sum `m ⊕ mt`.
///
/// # Safety
/// `m` and `mt` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pmod_direct_sum(
    m: *const PmodModule,
    mt: *const PmodModule,
    out: *mut *mut PmodModule,
) -> PmodStatus {
    guard(|| emit(out, module(m)?.direct_sum(module(mt)?)?))
}

/// Kawamura product, of arity four.
///
/// # Safety
/// `m` and `mt` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pmod_kawamura(
    m: *const PmodModule,
    mt: *const PmodModule,
    out: *mut *mut PmodModule,
) -> PmodStatus {
    guard(|| emit(out, kawamura(module(m)?, module(mt)?)))
}

/// Dual module; both legs must be invertible.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pmod_dual(m: *const PmodModule, rtol: f64, out: *mut *mut PmodModule) -> PmodStatus {
    guard(|| emit(out, dual_module(module(m)?, rtol)?))
}

/// Unitary equivalence test. `witness`, when not null, receives `2 * dim^2`
/// doubles of the intertwining unitary if the verdict is true and
/// `witness_len` is large enough.
///
/// # Safety
/// `m` and `mt` must be live handles, `verdict` writable, and `witness` null
/// or `witness_len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn pmod_equivalent(
    m: *const PmodModule,
    mt: *const PmodModule,
    rtol: f64,
    seed: u64,
    verdict: *mut PmodVerdict,
    witness: *mut f64,
    witness_len: usize,
) -> PmodStatus {
    guard(|| {
        if verdict.is_null() {
            return Err(null());
        }
        let e = equivalent(module(m)?, module(mt)?, rtol, seed)?;
        *verdict = match e.verdict {
            Verdict::True => PmodVerdict::True,
            Verdict::False => PmodVerdict::False,
            Verdict::Undecided => PmodVerdict::Undecided,
        };
        if let (Some(u), false) = (e.witness, witness.is_null()) {
            let entries = u.as_slice();
            if witness_len >= 2 * entries.len() {
                let dst = std::slice::from_raw_parts_mut(witness, 2 * entries.len());
                for (pair, z) in dst.chunks_exact_mut(2).zip(entries) {
                    pair[0] = z.re;
                    pair[1] = z.im;
                }
            }
        }
        Ok(())
    })
}

/// Atomic module for a binary prime word such as `"011"` and a unit phase.
///
/// # Safety
/// `word` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pmod_atomic_module(
    word: *const c_char,
    phase_re: f64,
    phase_im: f64,
    out: *mut *mut PmodModule,
) -> PmodStatus {
    guard(|| {
        let label = AtomicLabel::new(c_str(word)?, Complex64::new(phase_re, phase_im))?;
        emit(out, atomic_module(&label))
    })
}

/// GP module of a vector of `len` scalar modules, given as `4 * len` doubles
/// `a.re, a.im, b.re, b.im`.
///
/// # Safety
/// `pairs` must point to `4 * len` readable doubles and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn pmod_gp_module(pairs: *const f64, len: usize, out: *mut *mut PmodModule) -> PmodStatus {
    guard(|| {
        if pairs.is_null() {
            return Err(null());
        }
        let raw = std::slice::from_raw_parts(pairs, 4 * len);
        let z: Vec<(Complex64, Complex64)> =
            raw.chunks_exact(4).map(|q| (Complex64::new(q[0], q[1]), Complex64::new(q[2], q[3]))).collect();
        emit(out, gp_module(&GpVector::from_pairs(&z))?)
    })
}

/// Seeded sample from class `M` or `N`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pmod_random_module(
    dim: usize,
    class: PmodClass,
    seed: u64,
    zero_eigs: usize,
    out: *mut *mut PmodModule,
) -> PmodStatus {
    let class = match class {
        PmodClass::M => ModuleClass::M,
        PmodClass::N => ModuleClass::N,
    };
    guard(|| emit(out, random_module(dim, class, seed, zero_eigs)?))
}

/// Parses a JSON module file and checks it to `tol`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pmod_module_from_json(json: *const c_char, tol: f64, out: *mut *mut PmodModule) -> PmodStatus {
    guard(|| emit(out, parse_module_file(c_str(json)?, tol)?))
}

/// JSON module file text. Release with `pmod_string_free`.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pmod_module_to_json(m: *const PmodModule, out: *mut *mut c_char) -> PmodStatus {
    guard(|| {
        let text = serialize_module(module(m)?, &ModuleMeta::default());
        if out.is_null() {
            return Err(null());
        }
        *out = CString::new(text).map_err(|e| Fail(PmodStatus::InvalidUtf8, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pmod_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
