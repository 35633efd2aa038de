//! Submodule structure: intertwiners, the complete part, atoms and
//! irreducible decompositions.

pub mod atomic;
pub mod classify;
pub mod decompose;
pub mod equivalence;
pub mod intertwiner;
pub mod socle;

pub use atomic::{atomic_part, diffuse_certificate, AtomicSummand};
pub use classify::{classify_parts, complete_submodule, PartsReport};
pub use decompose::{decompose_full, Confidence, DecompositionReport, Label, Summand, Tag};
pub use equivalence::{equivalent, Equivalence, Verdict};
pub use intertwiner::{intertwiner_basis, star_intertwiner_basis};
pub use socle::{generated_algebra, is_irreducible, socle, Socle};
