use crate::gmodule::{GMap, GModule};
use crate::groups::abelianization;
use crate::int::Int;
use crate::lattice::{FgAb, IntMatrix};

use super::{CftError, Instance};

/// `c_p(τ) = κ⁻¹(ι_{p0}(τ)⁻¹ ι_p(τ))` for `p ≠ p0` and `τ ∈ G_p`.
pub fn c_p(inst: &Instance, p: usize, tau: usize) -> Result<Vec<Int>, CftError> {
    let p0 = inst.p0();
    if p == p0 {
        return Err(CftError::PlaceIsP0(p));
    }
    let a = inst.iota(p0, tau)?;
    let b = inst.iota(p, tau)?;
    let x = inst.gs.mul(inst.gs.inv(a), b);
    inst.kappa_inv(x).ok_or_else(|| CftError::InvalidInstance(format!("iota_p0({tau})^-1 iota_{p}({tau}) is not in Cl")))
}

/// The quotient `Q = G^S / ⟨[G^S, G^S], ι_p(G_p)⟩` with `Nm : Cl → Q`.
#[derive(Clone, Debug)]
pub struct NormModel {
    pub q: FgAb,
    /// `Q` as a trivial module, codomain of `nm`.
    pub q_module: GModule,
    pub nm: GMap,
    /// Image of each element of `G^S` in `Q`.
    pub gs_to_q: Vec<Vec<Int>>,
    /// `Nm(φ̄_q)` per auxiliary place.
    pub class_in_q: Vec<Vec<Int>>,
}

pub fn norm_model(inst: &Instance) -> NormModel {
    let ab = abelianization(&inst.gs);
    let mut gens = Vec::new();
    for place in &inst.places {
        for &s in &place.iota {
            gens.push(ab.images[s].clone());
        }
    }
    let (q, proj) = ab.group.quotient(&IntMatrix::from_cols(ab.group.ngens(), &gens));
    let gs_to_q: Vec<Vec<Int>> = ab.images.iter().map(|x| q.reduce_canon(&proj.apply(x))).collect();
    let k = inst.cl_orders.len();
    let cols: Vec<Vec<Int>> =
        (0..k).map(|j| gs_to_q[inst.kappa_of(&crate::lattice::matrix::unit(k, j))].clone()).collect();
    let q_module = GModule::trivial(&inst.group, q.clone());
    let nm = GMap::new_unchecked(inst.cl.clone(), q_module.clone(), IntMatrix::from_cols(q.ngens(), &cols));
    let class_in_q = inst.aux.iter().map(|a| q.reduce_canon(&nm.apply(&a.frobenius))).collect();
    NormModel { q, q_module, nm, gs_to_q, class_in_q }
}
