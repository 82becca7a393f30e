//! Exact computation of derivation algebras of two-step nilpotent Leibniz
//! algebras, with structural analysis of the resulting Lie algebras and a
//! registry of machine-checkable statements about them.

pub mod algebra;
pub mod catalog;
pub mod claims;
pub mod derivations;
pub mod dsl;
pub mod error;
pub mod exactlin;
pub mod liestruct;

pub use algebra::{Algebra, AlgebraKind, Centers, SeriesKind, Side};
pub use error::Error;
pub use exactlin::{Field, Mat, Scalar, Subspace};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
