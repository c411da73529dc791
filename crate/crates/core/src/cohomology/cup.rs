use crate::gmodule::{aug_ideal, augmentation, tensor, tensor_element, tensor_map, GMap, GModule};
use crate::int::Int;
use crate::lattice::AbMap;

use super::cohomology::{cohomology, CohClass, Cohomology};
use super::connecting::{connecting_hom, ConnectingHom, ExtensionData};
use super::resolution::CompleteResolution;
use super::CohomologyError;

/// `0 → ΔG ⊗ M → Z[G] ⊗ M → M → 0`.
pub fn aug_tensor_sequence(m: &GModule) -> Result<ExtensionData, CohomologyError> {
    let g = m.group();
    let (_, incl) = aug_ideal(g);
    let id = GMap::identity(m);
    let iota = tensor_map(&incl, &id)?;
    let pi = tensor_map(&augmentation(g), &id)?;
    // Z ⊗ M is M with the same presentation and action
    let pi = GMap::new_unchecked(pi.domain.clone(), m.clone(), pi.matrix().clone());
    ExtensionData::new(iota, pi)
}

/// Cup product with a class `ξ ∈ H^1(G, A)`, as a map `H^{-2}(C) → H^{-1}(C ⊗ A)`.
///
/// Computed by shifting dimension: `δ₂⁻¹ ∘ c₀ ∘ δ₁`, where `δ₁, δ₂` are connecting maps
/// of the augmentation sequences for `C` and `C ⊗ A`, and `c₀` is the cup product
/// `H^{-1}(ΔG ⊗ C) → H^0(ΔG ⊗ C ⊗ A)`, `x ↦ -Σ_σ σx ⊗ g(σ)`.
#[derive(Clone, Debug)]
pub struct CupWithH1 {
    pub source: Cohomology,
    pub target: Cohomology,
    pub map: AbMap,
    delta1: ConnectingHom,
    delta2: ConnectingHom,
    mid: Cohomology,
}

impl CupWithH1 {
    pub fn new(res: &CompleteResolution, c: &GModule, xi: &CohClass) -> Result<CupWithH1, CohomologyError> {
        if xi.degree() != 1 {
            return Err(CohomologyError::DegreeMismatch);
        }
        let a = xi.cohomology().module().clone();
        let g = c.group();
        let ca = tensor(c, &a)?;
        let delta1 = connecting_hom(res, &aug_tensor_sequence(c)?, -2)?;
        let delta2 = connecting_hom(res, &aug_tensor_sequence(&ca)?, -1)?;
        let dgc = delta1.target.module().clone();
        let mid = cohomology(res, delta2.target.module(), 0)?;
        let na = a.ngens();
        let rep = xi.rep();
        let src_h = delta1.target.group().clone();
        let k = src_h.canon_len();
        let inv = delta2.map.preimager();
        let mut cols = Vec::with_capacity(k);
        for j in 0..k {
            let x = delta1.target.rep_of(&crate::lattice::matrix::unit(k, j));
            let mut y = vec![Int::ZERO; mid.chains().ngens()];
            for s in g.elements() {
                let t = tensor_element(&dgc.act(s, &x), &rep[s * na..(s + 1) * na]);
                for (u, v) in y.iter_mut().zip(t) {
                    *u -= v;
                }
            }
            let h = mid.class_of(&y)?;
            cols.push(inv.preimage(&h).ok_or_else(|| CohomologyError::NotExact("δ₂ is not surjective".into()))?);
        }
        let shift = AbMap::new(
            src_h,
            delta2.source.group().clone(),
            crate::lattice::IntMatrix::from_cols(delta2.source.group().canon_len(), &cols),
        )?;
        let map = delta1.map.then(&shift);
        Ok(CupWithH1 { source: delta1.source.clone(), target: delta2.source.clone(), map, delta1, delta2, mid })
    }

    pub fn apply(&self, z: &CohClass) -> Result<CohClass, CohomologyError> {
        if z.degree() != -2 {
            return Err(CohomologyError::DegreeMismatch);
        }
        let h = self.source.class_of(z.rep())?;
        Ok(self.target.class_from_coords(&self.target.group().reduce_canon(&self.map.apply(&h))))
    }

    pub fn delta1(&self) -> &ConnectingHom {
        &self.delta1
    }

    pub fn delta2(&self) -> &ConnectingHom {
        &self.delta2
    }

    pub fn degree_zero_cohomology(&self) -> &Cohomology {
        &self.mid
    }
}

/// `ξ ∪ z` for `ξ ∈ H^1(G, A)` and `z ∈ H^{-2}(G, C)`.
pub fn cup_with_h1(res: &CompleteResolution, xi: &CohClass, z: &CohClass) -> Result<CohClass, CohomologyError> {
    if xi.degree() != 1 || z.degree() != -2 {
        return Err(CohomologyError::DegreeMismatch);
    }
    CupWithH1::new(res, z.cohomology().module(), xi)?.apply(z)
}
