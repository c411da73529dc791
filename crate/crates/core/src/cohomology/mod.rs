//! Tate cohomology of finite groups via a complete resolution.

#[allow(clippy::module_inception)]
mod cohomology;
mod connecting;
mod cup;
mod extension;
mod resolution;
mod shapiro;

use thiserror::Error;

use crate::gmodule::GModuleError;
use crate::lattice::LatticeError;

pub use cohomology::{
    apply_blockwise, bar_chain, cochain_from_values, cochain_group, cochain_value, cohomology, is_coboundary,
    is_cocycle, CohClass, Cohomology,
};
pub use connecting::{connecting_hom, ConnectingHom, ExtensionData};
pub use cup::{aug_tensor_sequence, cup_with_h1, CupWithH1};
pub use extension::{
    aug_hom_sequence, cocycle_to_extension, ext1_aug_map, ext1_aug_to_h2, extension_equivalence, extension_to_cocycle,
    Cocycle1, ExtensionFromCocycle,
};
pub use resolution::{tuple_index, tuple_of, CompleteResolution, ZgMatrix};
pub use shapiro::{shapiro_hminus2, ShapiroIso};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("degree window [{lo}, {hi}] exceeds the supported range")]
    WindowTooLarge { lo: i32, hi: i32 },
    #[error("degree {0} is outside the resolution window")]
    DegreeOutOfWindow(i32),
    #[error("degree mismatch")]
    DegreeMismatch,
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("modules are over different groups")]
    GroupMismatch,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    GModule(#[from] GModuleError),
}
