//! Module algebra: validation, fusion, duals and the scalar group.

pub mod duality;
pub mod fusion;
pub mod module;
pub mod scalar;

pub use duality::{dual_module, duality_check, DualityReport};
pub use fusion::{boxtimes, boxtimes_polar, kawamura, star};
pub use module::{parse_word, word_to_string, ModuleClass, PModule, Validation};
pub use scalar::{scalar_coords_iso, star_scalar, GroupCoords, ScalarModule};
