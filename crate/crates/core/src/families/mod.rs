//! Constructors and closed-form fusion rules for the classified families.

pub mod atomic;
pub mod d2;
pub mod gp;
pub mod random;
pub mod words;

pub use atomic::{atomic_diffuse_fuse, atomic_module, prime_words, AtomicLabel};
pub use d2::{d2_fuse, D2Block, D2};
pub use gp::{gp_canonical, gp_fuse, gp_module, GpVector};
pub use random::{random_gp_vector, random_module};
