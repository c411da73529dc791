use crate::cft::{Instance, XYModules};
use crate::gmodule::{is_short_exact, local_aug_ideal, regular, GMap, GModule};
use crate::int::Int;
use crate::lattice::IntMatrix;

use super::LabError;

/// `W = ⊕_{p∈S} Z[G]ΔG_p ⊕ ⊕_q Z[G]`, `F = ⊕_{S'} Z[G]`, `R = ker(W → Z[G])`,
/// `B = ker(F → Z[G])`, with `R ↪ B ↠ X`.
#[derive(Clone, Debug)]
pub struct WrbData {
    pub w: GModule,
    pub f: GModule,
    pub r: GModule,
    pub b: GModule,
    /// `W → Z[G]`, landing in `ΔG`.
    pub w_to_zg: GMap,
    /// `W → F`, the inclusion on `S`-blocks and the identity on auxiliary blocks.
    pub w_to_f: GMap,
    /// `F → Z[G]`.
    pub f_to_zg: GMap,
    pub r_in_w: GMap,
    pub b_in_f: GMap,
    pub r_to_b: GMap,
    pub b_to_x: GMap,
    /// Inclusion of each `S`-block `Z[G]ΔG_p` into `Z[G]`.
    pub local_incl: Vec<GMap>,
    /// Offsets of the blocks of `W`: `S`-places first, then auxiliary places.
    pub w_offsets: Vec<usize>,
    /// Offsets of the blocks of `F`, same order.
    pub f_offsets: Vec<usize>,
}

impl WrbData {
    /// Embeds block vectors of `W` into one vector.
    pub fn w_vector(&self, blocks: &[(usize, Vec<Int>)]) -> Vec<Int> {
        let mut v = vec![Int::ZERO; self.w.ngens()];
        for (k, x) in blocks {
            for (i, c) in x.iter().enumerate() {
                v[self.w_offsets[*k] + i] += c;
            }
        }
        v
    }

    /// Coordinates in `R` of an element of `W` lying in `R`.
    pub fn r_coords(&self, w: &[Int]) -> Option<Vec<Int>> {
        self.r_in_w.preimager().preimage(w)
    }

    /// Coordinates in the `p`-block of `W` of an element of `Z[G]ΔG_p`.
    pub fn local_coords(&self, p: usize, x: &[Int]) -> Option<Vec<Int>> {
        self.local_incl[p].preimager().preimage(x)
    }
}

/// `Z[G] → Z[G]`, `x ↦ x(φ − 1)`.
fn right_mult_minus_one(g: &crate::groups::FiniteGroup, phi: usize) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n, n);
    for x in g.elements() {
        m[(g.mul(x, phi), x)] += Int::ONE;
        m[(x, x)] -= Int::ONE;
    }
    m
}

pub fn build_wrb(inst: &Instance, xy: &XYModules) -> Result<WrbData, LabError> {
    let g = &inst.group;
    let n = g.order();
    let zg = regular(g);
    let locals: Vec<(GModule, GMap)> = inst.places.iter().map(|p| local_aug_ideal(g, &p.subgroup)).collect();
    let mut w_parts: Vec<GModule> = locals.iter().map(|(m, _)| m.clone()).collect();
    let mut f_parts: Vec<GModule> = vec![zg.clone(); inst.places.len()];
    for _ in &inst.aux {
        w_parts.push(zg.clone());
        f_parts.push(zg.clone());
    }
    let (w, _, _) = GModule::direct_sum(&w_parts)?;
    let (f, _, _) = GModule::direct_sum(&f_parts)?;
    let offsets = |parts: &[GModule]| {
        parts
            .iter()
            .scan(0, |acc, p| {
                let o = *acc;
                *acc += p.ngens();
                Some(o)
            })
            .collect::<Vec<_>>()
    };
    let w_offsets = offsets(&w_parts);
    let f_offsets = offsets(&f_parts);

    // Split places have φ_q = 1, so the auxiliary components of both maps vanish.
    let phi = g.identity();
    let mut w_to_f = IntMatrix::zeros(f.ngens(), w.ngens());
    let mut f_to_zg = IntMatrix::zeros(n, f.ngens());
    for (k, (_, incl)) in locals.iter().enumerate() {
        w_to_f.set_block(f_offsets[k], w_offsets[k], incl.matrix());
        f_to_zg.set_block(0, f_offsets[k], &IntMatrix::identity(n));
    }
    for q in 0..inst.aux.len() {
        let k = inst.places.len() + q;
        w_to_f.set_block(f_offsets[k], w_offsets[k], &IntMatrix::identity(n));
        f_to_zg.set_block(0, f_offsets[k], &right_mult_minus_one(g, phi));
    }
    let w_to_f = GMap::new(w.clone(), f.clone(), w_to_f)?;
    let f_to_zg = GMap::new(f.clone(), zg.clone(), f_to_zg)?;
    let w_to_zg = w_to_f.then(&f_to_zg);
    let (r, r_in_w) = w_to_zg.kernel();
    let (b, b_in_f) = f_to_zg.kernel();
    let r_to_b = r_in_w.then(&w_to_f).factor_through(&b_in_f)?;

    // F → Y: α in the p-block goes to α·p(L).
    let mut f_to_y = IntMatrix::zeros(xy.y.ngens(), f.ngens());
    for (k, place) in inst.places.iter().enumerate() {
        for x in g.elements() {
            f_to_y[(xy.y_offsets[k] + place.cosets.rep_index(x), f_offsets[k] + x)] = Int::ONE;
        }
    }
    let f_to_y = GMap::new(f.clone(), xy.y.clone(), f_to_y)?;
    let b_to_x = b_in_f.then(&f_to_y).factor_through(&xy.incl)?;
    if !is_short_exact(&r_to_b, &b_to_x) {
        return Err(LabError::NotWellDefined("0 → R → B → X → 0 is not exact".into()));
    }
    let local_incl = locals.into_iter().map(|(_, i)| i).collect();
    Ok(WrbData { w, f, r, b, w_to_zg, w_to_f, f_to_zg, r_in_w, b_in_f, r_to_b, b_to_x, local_incl, w_offsets, f_offsets })
}
