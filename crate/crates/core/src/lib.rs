pub mod algebra;
pub mod cli;
pub mod error;
pub mod families;
pub mod io;
pub mod linalg;
pub mod structure;

pub use algebra::{ModuleClass, PModule};
pub use error::{Error, Result};
