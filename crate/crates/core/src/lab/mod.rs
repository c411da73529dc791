//! The Tate-sequence laboratory: `W, R, B`, the module `𝓗`, the snake map and its
//! closed forms, the pushout `∇`, both connecting homomorphisms, `δ₁` and the
//! norm-map corollaries, each tested against a generic homological computation.

mod delta1;
mod fixture;
mod homology;
mod nabla;
mod norm_suite;
mod script_h;
mod snake;
mod span;
mod subgroups;
mod wrb;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cft::{xy_modules, CftError, Instance, XYModules};
use crate::cohomology::{CohomologyError, CompleteResolution};
use crate::gmodule::GModuleError;
use crate::lattice::LatticeError;

pub use delta1::{delta1, delta1_invariance, Delta1};
pub use fixture::{fixture_unit_check, ClassFixture, Fixture, UnitModuleFile, FIXTURE_SCHEMA_VERSION};
pub use homology::{delta_minus2, gens_of_homology, h_minus1_x_vanishes, DeltaMinus2, GensOfHomology};
pub use nabla::{build_nabla, NablaData};
pub use norm_suite::norm_suite;
pub use script_h::{build_script_h, ScriptH};
pub use snake::{r_element, snake_closed_form, snake_closed_form_twisted, snake_map, SnakeMap};
pub use span::Span;
pub use subgroups::{subgroups_cdc, Cdc};
pub use wrb::{build_wrb, WrbData};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabError {
    #[error("restriction of the snake map to R leaves the image of Cl")]
    ImageEscapesCl,
    #[error("component map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("class is not killed by the norm")]
    NotNormKilled,
    #[error("fixture schema error: {0}")]
    FixtureSchemaError(String),
    #[error("inconsistent fixture for class {class}: {reason}")]
    InconsistentFixture { class: usize, reason: String },
    #[error(transparent)]
    Cft(#[from] CftError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    GModule(#[from] GModuleError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// One assertion with its outcome and the data needed to replay it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    pub witness: serde_json::Value,
}

impl Check {
    pub fn new(id: &str, pass: bool, witness: serde_json::Value) -> Check {
        Check { id: id.into(), pass, witness }
    }
}

/// The degree window used by the lab: it covers Tate degrees `[-2, 1]`.
pub const LAB_WINDOW: (i32, i32) = (-3, 2);

/// An instance with the objects every pipeline needs.
#[derive(Clone, Debug)]
pub struct Lab {
    pub inst: Instance,
    pub res: CompleteResolution,
    pub xy: XYModules,
    pub wrb: WrbData,
    pub sh: ScriptH,
    pub snake: SnakeMap,
}

impl Lab {
    pub fn new(inst: &Instance) -> Result<Lab, LabError> {
        Lab::with_window(inst, LAB_WINDOW)
    }

    pub fn with_window(inst: &Instance, window: (i32, i32)) -> Result<Lab, LabError> {
        let res = CompleteResolution::new(&inst.group, window.0, window.1)?;
        let xy = xy_modules(inst);
        let wrb = build_wrb(inst, &xy)?;
        let sh = build_script_h(inst);
        let snake = snake_map(inst, &wrb, &sh)?;
        Ok(Lab { inst: inst.clone(), res, xy, wrb, sh, snake })
    }
}
