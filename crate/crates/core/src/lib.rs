//! Computational laboratory for Tate cohomology of Galois modules attached to
//! finite Galois extensions of number fields, modelled abstractly.

pub mod gmodule;
pub mod cft;
pub mod cohomology;
pub mod groups;
pub mod int;
pub mod lab;
pub mod lattice;

pub use int::Int;
