use crate::cft::{c_p, Instance};
use crate::cohomology::{bar_chain, cohomology, Cohomology, CompleteResolution};
use crate::int::Int;

use super::{LabError, Span};

/// `C̄ ≤ H^{-1}(G, Cl)` generated by the classes `c̄_p(τ)`, `C ≤ Cl` generated by the
/// `c_p(τ)`, and `D = ⟨(σ − 1)c⟩ ≤ Cl`.
#[derive(Clone, Debug)]
pub struct Cdc {
    pub h_minus1: Cohomology,
    pub cbar: Span,
    pub c: Span,
    pub d: Span,
}

impl Cdc {
    /// Class in `H^{-1}(G, Cl)` of an element of `ker N`.
    pub fn class(&self, res: &CompleteResolution, inst: &Instance, c: &[Int]) -> Result<Vec<Int>, LabError> {
        let h = &self.h_minus1;
        Ok(h.group().reduce_canon(&h.class_of(&bar_chain(res, &inst.cl, &[], c))?))
    }

    pub fn d_is_stable(&self, inst: &Instance) -> bool {
        inst.group.elements().all(|g| self.d.gens.columns().iter().all(|x| self.d.contains(&inst.cl.act(g, x))))
    }
}

pub fn subgroups_cdc(inst: &Instance, res: &CompleteResolution) -> Result<Cdc, LabError> {
    let h_minus1 = cohomology(res, &inst.cl, -1)?;
    let cl = inst.cl.ab();
    let p0 = inst.p0();
    let mut cs = Vec::new();
    for (p, place) in inst.places.iter().enumerate() {
        if p != p0 {
            for &tau in place.subgroup.elements() {
                cs.push(c_p(inst, p, tau)?);
            }
        }
    }
    let classes = cs
        .iter()
        .map(|c| h_minus1.class_of(&bar_chain(res, &inst.cl, &[], c)))
        .collect::<Result<Vec<_>, _>>()?;
    let cbar = Span::from_vecs(h_minus1.group(), &classes);
    let c = Span::from_vecs(cl, &cs);
    let mut ds = Vec::new();
    for g in inst.group.elements() {
        for j in 0..cl.ngens() {
            let x = cl.gen(j);
            let y: Vec<Int> = inst.cl.act(g, &x).iter().zip(&x).map(|(a, b)| a - b).collect();
            ds.push(inst.cl_reduce(&y));
        }
    }
    let d = Span::from_vecs(cl, &ds);
    Ok(Cdc { h_minus1, cbar, c, d })
}
