//! Abstract class-field data: places, decomposition groups, the extension `G^S`
//! of `G` by the class group, sections, auxiliary split places and the norm model.

mod instance;
mod modules;
mod norm;
mod synth;

use thiserror::Error;

use crate::groups::GroupError;

pub use instance::{
    validate_instance, AuxPlace, AuxPlaceFile, ClFile, Instance, InstanceFile, Place, PlaceFile, ValidationReport,
    Violation, SCHEMA_VERSION,
};
pub use modules::{xy_modules, XYModules};
pub use norm::{c_p, norm_model, NormModel};
pub use synth::{campaign_params, extend_hom, i2_plain, i2_twist, synth_instance, AuxSpec, ClPiece, ExtensionSpec, SynthParams, Twist};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CftError {
    #[error("place {0} is the distinguished place")]
    PlaceIsP0(usize),
    #[error("element {element} is not in the decomposition group of place {place}")]
    NotInDecompositionGroup { place: usize, element: usize },
    #[error("unknown place {0}")]
    UnknownPlace(usize),
    #[error("unsatisfiable parameters: {0}")]
    UnsatisfiableParams(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
