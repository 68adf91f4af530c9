//! Executable diagram-category machinery: exact endomorphism algebras of
//! quiver representations over Q and Z, their dual coalgebras and comodule
//! categories, and computable verification of the structural theorems
//! relating them (duality, functoriality, equivalence data) on finite
//! instances.

pub mod exact_linalg;
pub mod checks;
pub mod coalgebra;
pub mod diagram;
pub mod emodule;
pub mod end_algebra;
pub mod fgmod;
pub mod functors;

mod error;

pub use error::{Error, Result};
