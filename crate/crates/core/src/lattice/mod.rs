//! Integer matrices, normal forms and finitely generated abelian groups.

pub mod echelon;
pub mod fgab;
pub mod matrix;
pub mod snf;

pub use echelon::{column_hnf, kernel, lattice_basis, ColumnHnf, LatticeSolver};
pub use fgab::{homology_at, AbMap, FgAb, Homology, LatticeError, Preimager};
pub use matrix::IntMatrix;
pub use snf::{invariant_factors, smith, smith_left, Snf};
