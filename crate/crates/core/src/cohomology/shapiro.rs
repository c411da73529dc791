use crate::groups::{abelianization, FiniteGroup, Subgroup};
use crate::gmodule::induced;
use crate::int::Int;
use crate::lattice::{AbMap, FgAb, IntMatrix};

use super::cohomology::{bar_chain, cohomology, Cohomology};
use super::resolution::CompleteResolution;
use super::CohomologyError;

/// `H^ab → H^{-2}(G, Z[G/H])`, `τ[H,H] ↦ class([τ] ⊗ e_H)`.
#[derive(Clone, Debug)]
pub struct ShapiroIso {
    pub hab: FgAb,
    pub target: Cohomology,
    pub map: AbMap,
}

impl ShapiroIso {
    pub fn is_isomorphism(&self) -> bool {
        self.map.is_isomorphism()
    }
}

pub fn shapiro_hminus2(res: &CompleteResolution, g: &FiniteGroup, h: &Subgroup) -> Result<ShapiroIso, CohomologyError> {
    let m = induced(g, h);
    let target = cohomology(res, &m, -2)?;
    let (hg, _) = h.as_group();
    let ab = abelianization(&hg);
    let mut e_h = vec![Int::ZERO; m.ngens()];
    e_h[0] = Int::ONE;
    let k = ab.group.canon_len();
    let span_cols: Vec<Vec<Int>> = ab.images.clone();
    let img_cols = h
        .elements()
        .iter()
        .map(|&t| target.class_of(&bar_chain(res, &m, &[t], &e_h)))
        .collect::<Result<Vec<_>, _>>()?;
    let span = IntMatrix::from_cols(k, &span_cols);
    let images = IntMatrix::from_cols(target.group().canon_len(), &img_cols);
    let map = AbMap::from_spanning_images(ab.group.clone(), &span, &images, target.group().clone())?;
    Ok(ShapiroIso { hab: ab.group, target, map })
}
