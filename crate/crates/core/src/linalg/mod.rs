//! Dense complex linear algebra used by the module computations.

pub mod eig;
pub mod kernel;
pub mod kron;
pub mod matrix;
pub mod normal;
pub mod polar;
pub mod random;
pub mod svd;

pub use eig::{hermitian_eig, HermEig};
pub use kernel::{commutation_kernel, kernel_basis, kernel_basis_abs};
pub use kron::{flip_permutation, kron};
pub use matrix::{vdot, vnorm, CMatrix};
pub use normal::{normal_eig, NormalEig};
pub use polar::{polar, psd_funcalc, PolarPair, PsdFn};
pub use svd::{svd, svd_right, Svd};

/// Default relative tolerance for rank and kernel decisions.
pub const DEFAULT_RTOL: f64 = 1e-9;
