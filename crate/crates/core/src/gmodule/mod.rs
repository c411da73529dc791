//! Modules over group rings of finite groups.

mod fixed;
mod hom_tensor;
mod module;
mod standard;

pub use fixed::{fixed_and_norm, FixedNorm};
pub use hom_tensor::{evaluation, hom, hom_element, hom_images, tensor, tensor_element, tensor_map};
pub use module::{is_exact_at, is_short_exact, GMap, GModule, GModuleError, SpanSolver};
pub use standard::{
    aug_ideal, augmentation, induced, local_aug_ideal, local_aug_spanning_set, regular, standard_modules, trivial_z,
    StandardModules,
};
