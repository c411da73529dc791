use crate::cft::{c_p, CftError, Instance};
use crate::gmodule::{local_aug_spanning_set, GMap};
use crate::int::Int;
use crate::lattice::{AbMap, FgAb, IntMatrix};

use super::{LabError, ScriptH, WrbData};

/// The prime-by-prime map `W → 𝓗` and the snake map `s : R → Cl`.
#[derive(Clone, Debug)]
pub struct SnakeMap {
    pub w_to_h: GMap,
    pub s: GMap,
}

impl SnakeMap {
    /// `s_q(1)`: the snake map on the identity of the `q`-th auxiliary copy of `Z[G]`.
    pub fn s_q_one(&self, inst: &Instance, wrb: &WrbData, q: usize) -> Vec<Int> {
        let k = inst.places.len() + q;
        let mut w = vec![Int::ZERO; wrb.w.ngens()];
        w[wrb.w_offsets[k] + inst.group.identity()] = Int::ONE;
        let r = wrb.r_coords(&w).expect("auxiliary copies lie in R");
        inst.cl_reduce(&self.s.apply(&r))
    }

    pub fn apply_r(&self, inst: &Instance, r: &[Int]) -> Vec<Int> {
        inst.cl_reduce(&self.s.apply(r))
    }
}

pub fn snake_map(inst: &Instance, wrb: &WrbData, sh: &ScriptH) -> Result<SnakeMap, LabError> {
    let g = &inst.group;
    let hab = sh.module.ab().clone();
    let mut m = IntMatrix::zeros(hab.ngens(), wrb.w.ngens());
    for (p, place) in inst.places.iter().enumerate() {
        let span = local_aug_spanning_set(g, &place.subgroup);
        let rank = wrb.local_incl[p].domain.ngens();
        if rank == 0 {
            continue;
        }
        let pre = wrb.local_incl[p].preimager();
        let mut coords = Vec::new();
        let mut images = Vec::new();
        // Spanning vectors g(h − 1), ordered by (g, h), go to g·(ι_p(h) − 1).
        for x in g.elements() {
            for &h in place.subgroup.elements() {
                if h == g.identity() {
                    continue;
                }
                coords.push(pre.preimage(&span.col(coords.len())).expect("spanning vector lies in the ideal"));
                images.push(sh.translate(inst, inst.lift(x), inst.iota(p, h)?));
            }
        }
        let block = AbMap::from_spanning_images(
            FgAb::free(rank),
            &IntMatrix::from_cols(rank, &coords),
            &IntMatrix::from_cols(hab.ngens(), &images),
            hab.clone(),
        )
        .map_err(|e| LabError::NotWellDefined(format!("place {}: {e}", place.id)))?;
        m.set_block(0, wrb.w_offsets[p], &block.matrix);
    }
    for (q, aux) in inst.aux.iter().enumerate() {
        let off = wrb.w_offsets[inst.places.len() + q];
        let phi = inst.kappa_of(&aux.frobenius);
        for x in g.elements() {
            m.set_col(off + x, &sh.translate(inst, inst.lift(x), phi));
        }
    }
    let w_to_h = GMap::new(wrb.w.clone(), sh.module.clone(), m)?;
    let r_to_h = wrb.r_in_w.then(&w_to_h);
    let s = r_to_h.factor_through(&sh.e).map_err(|_| LabError::ImageEscapesCl)?;
    Ok(SnakeMap { w_to_h, s })
}

/// `r^{(p)}_{σ,τ}` as coordinates in `R`: `σρ_p(σ⁻¹τ) − τ` in the `p`-block, its negative in the `p0`-block.
pub fn r_element(inst: &Instance, wrb: &WrbData, p: usize, sigma: usize, tau: usize) -> Result<Vec<Int>, LabError> {
    let p0 = inst.p0();
    if p == p0 {
        return Err(CftError::PlaceIsP0(p).into());
    }
    let g = &inst.group;
    let place = inst.places.get(p).ok_or(CftError::UnknownPlace(p))?;
    let a = g.mul(sigma, place.cosets.rho[g.mul(g.inv(sigma), tau)]);
    let mut v = vec![Int::ZERO; g.order()];
    v[a] += Int::ONE;
    v[tau] -= Int::ONE;
    let neg: Vec<Int> = v.iter().map(|x| -x).collect();
    let bad = || LabError::NotWellDefined(format!("r element for place {p} leaves W"));
    let in_p = wrb.local_coords(p, &v).ok_or_else(bad)?;
    let in_p0 = wrb.local_coords(p0, &neg).ok_or_else(bad)?;
    let w = wrb.w_vector(&[(p, in_p), (p0, in_p0)]);
    wrb.r_coords(&w).ok_or_else(bad)
}

fn closed_form_arg(inst: &Instance, p: usize, sigma: usize, tau: usize) -> usize {
    let g = &inst.group;
    let rho = &inst.places[p].cosets.rho;
    g.mul(g.inv(tau), g.mul(sigma, rho[g.mul(g.inv(sigma), tau)]))
}

/// `τ·c_p(τ⁻¹σρ_p(σ⁻¹τ))`.
pub fn snake_closed_form(inst: &Instance, p: usize, sigma: usize, tau: usize) -> Result<Vec<Int>, LabError> {
    let h = closed_form_arg(inst, p, sigma, tau);
    Ok(inst.cl_act(tau, &c_p(inst, p, h)?))
}

/// `τh·c_p(h)` with `h = τ⁻¹σρ_p(σ⁻¹τ)`: the value of `s(r)` computed directly in `𝓗`.
pub fn snake_closed_form_twisted(inst: &Instance, p: usize, sigma: usize, tau: usize) -> Result<Vec<Int>, LabError> {
    let h = closed_form_arg(inst, p, sigma, tau);
    Ok(inst.cl_act(inst.group.mul(tau, h), &c_p(inst, p, h)?))
}
