//! Exact structure-constant kernel for finite-dimensional Hopf algebras,
//! module algebras, smash products and Drinfeld twists.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod field;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod module_algebra;
pub mod random;
pub mod report;
pub mod smash;
pub mod suites;
pub mod twist;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use linalg::{Matrix, Subspace};
