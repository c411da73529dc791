use crate::cft::{c_p, Instance, XYModules};
use crate::cohomology::{bar_chain, cohomology, connecting_hom, Cohomology, CompleteResolution, ConnectingHom};
use crate::groups::abelianization;
use crate::int::Int;
use crate::lattice::{AbMap, FgAb, IntMatrix};

use super::{LabError, NablaData};

/// One generator `[τ] ⊗ (p(L) − p0(L))` of `H^{-2}(G, X)` and its two images in `H^{-1}(G, Cl)`.
#[derive(Clone, Debug)]
pub struct DeltaGenerator {
    pub place: usize,
    pub tau: usize,
    pub generic: Vec<Int>,
    pub closed: Vec<Int>,
}

#[derive(Clone, Debug)]
pub struct DeltaMinus2 {
    pub delta: ConnectingHom,
    pub generators: Vec<DeltaGenerator>,
}

impl DeltaMinus2 {
    pub fn agree(&self) -> bool {
        self.generators.iter().all(|g| g.generic == g.closed)
    }
}

fn x_gen(inst: &Instance, xy: &XYModules, p: usize) -> Vec<Int> {
    let j = xy.x_index(p, inst.group.identity()).expect("identity represents the trivial coset");
    crate::lattice::matrix::unit(xy.x.ngens(), j)
}

/// The generic connecting map of the `∇`-sequence against `[τ]⊗(p(L) − p0(L)) ↦ c̄_p(τ)`.
pub fn delta_minus2(
    inst: &Instance,
    res: &CompleteResolution,
    xy: &XYModules,
    nabla: &NablaData,
) -> Result<DeltaMinus2, LabError> {
    let delta = connecting_hom(res, &nabla.seq, -2)?;
    let p0 = inst.p0();
    let mut generators = Vec::new();
    for (p, place) in inst.places.iter().enumerate() {
        if p == p0 {
            continue;
        }
        let x = x_gen(inst, xy, p);
        for &tau in place.subgroup.elements() {
            let z = bar_chain(res, &xy.x, &[tau], &x);
            let generic = delta.apply(&delta.source.class_of(&z)?);
            let c = c_p(inst, p, tau)?;
            let closed = delta.target.group().reduce_canon(&delta.target.class_of(&bar_chain(res, &inst.cl, &[], &c))?);
            generators.push(DeltaGenerator { place: p, tau, generic, closed });
        }
    }
    Ok(DeltaMinus2 { delta, generators })
}

/// `Ker(⊕_p G_p^ab → G^ab) → H^{-2}(G, X)`, `x_p(τ) ↦ [τ]⊗(p(L) − p0(L))`.
#[derive(Clone, Debug)]
pub struct GensOfHomology {
    pub kernel: FgAb,
    pub h: Cohomology,
    pub map: AbMap,
}

impl GensOfHomology {
    pub fn orders_equal(&self) -> bool {
        self.kernel.order() == self.h.group().order()
    }

    pub fn bijective(&self) -> bool {
        self.map.is_isomorphism()
    }
}

pub fn gens_of_homology(
    inst: &Instance,
    res: &CompleteResolution,
    xy: &XYModules,
) -> Result<GensOfHomology, LabError> {
    let g = &inst.group;
    let h = cohomology(res, &xy.x, -2)?;
    let gab = abelianization(g);
    let p0 = inst.p0();
    let mut parts = Vec::new();
    let mut span_cols: Vec<Vec<Int>> = Vec::new();
    let mut image_cols = Vec::new();
    let mut to_gab_cols = Vec::new();
    let mut offset = 0;
    let locals: Vec<_> = inst.places.iter().map(|p| abelianization(&p.subgroup.as_group().0)).collect();
    let total: usize = locals.iter().map(|a| a.group.ngens()).sum();
    for (p, place) in inst.places.iter().enumerate() {
        let ab = &locals[p];
        let x = (p != p0).then(|| x_gen(inst, xy, p));
        for (k, &tau) in place.subgroup.elements().iter().enumerate() {
            let mut v = vec![Int::ZERO; total];
            v[offset..offset + ab.group.ngens()].clone_from_slice(&ab.images[k]);
            span_cols.push(v);
            image_cols.push(match &x {
                Some(x) => h.class_of(&bar_chain(res, &xy.x, &[tau], x))?,
                None => h.group().zero(),
            });
            to_gab_cols.push(gab.images[tau].clone());
        }
        offset += ab.group.ngens();
        parts.push(ab.group.clone());
    }
    let sum = FgAb::direct_sum(&parts);
    let span = IntMatrix::from_cols(total, &span_cols);
    let to_gab = AbMap::from_spanning_images(
        sum.clone(),
        &span,
        &IntMatrix::from_cols(gab.group.ngens(), &to_gab_cols),
        gab.group.clone(),
    )?;
    let to_h =
        AbMap::from_spanning_images(sum, &span, &IntMatrix::from_cols(h.group().ngens(), &image_cols), h.group().clone())?;
    let (kernel, incl) = to_gab.kernel();
    let map = incl.then(&to_h);
    Ok(GensOfHomology { kernel, h, map })
}

pub fn h_minus1_x_vanishes(res: &CompleteResolution, xy: &XYModules) -> Result<bool, LabError> {
    Ok(cohomology(res, &xy.x, -1)?.group().is_trivial())
}
