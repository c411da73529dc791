//! Finite groups by multiplication table.

mod extension;
mod group;

pub use extension::{extension_from_cocycle, GroupExtension};
pub use group::{
    abelianization, cosets_and_reps, first_non_multiplicative, normal_closure, Abelianization, Cosets, FiniteGroup,
    GroupError, GroupHom, Subgroup,
};
