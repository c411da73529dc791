use crate::gmodule::{induced, trivial_z, GMap, GModule};
use crate::int::Int;
use crate::lattice::{FgAb, IntMatrix};

use super::Instance;

/// `Y = ⊕_{p ∈ S} Z[G/G_p]`, `X = ker(Y → Z)` on the basis `τp(L) − p0(L)`.
#[derive(Clone, Debug)]
pub struct XYModules {
    pub y: GModule,
    pub x: GModule,
    pub aug: GMap,
    pub incl: GMap,
    /// Offset of each place's block in `Y`.
    pub y_offsets: Vec<usize>,
    /// `(p, τ)` for each basis vector of `X`, with `τ ∈ D_p`.
    pub x_basis: Vec<(usize, usize)>,
}

impl XYModules {
    /// Index of `τp(L) − p0(L)` in the basis of `X`.
    pub fn x_index(&self, p: usize, tau: usize) -> Option<usize> {
        self.x_basis.iter().position(|&b| b == (p, tau))
    }
}

pub fn xy_modules(inst: &Instance) -> XYModules {
    let g = &inst.group;
    let parts: Vec<GModule> = inst.places.iter().map(|p| induced(g, &p.subgroup)).collect();
    let (y, _, _) = GModule::direct_sum(&parts).expect("same group");
    let mut y_offsets = Vec::new();
    let mut off = 0;
    for p in &parts {
        y_offsets.push(off);
        off += p.ngens();
    }
    let rank_y = off;
    let aug = GMap::new_unchecked(y.clone(), trivial_z(g), IntMatrix::from_rows(vec![vec![Int::ONE; rank_y]]));
    let p0 = inst.p0();
    let mut x_basis = Vec::new();
    for (p, place) in inst.places.iter().enumerate() {
        if p != p0 {
            for &tau in &place.cosets.reps {
                x_basis.push((p, tau));
            }
        }
    }
    let mut incl = IntMatrix::zeros(rank_y, x_basis.len());
    for (j, &(p, tau)) in x_basis.iter().enumerate() {
        incl[(y_offsets[p] + inst.places[p].cosets.rep_index(tau), j)] += Int::ONE;
        incl[(y_offsets[p0], j)] -= Int::ONE;
    }
    let n = x_basis.len();
    let action = g
        .elements()
        .map(|s| {
            let mut a = IntMatrix::zeros(n, n);
            for (j, &(p, tau)) in x_basis.iter().enumerate() {
                let rep = inst.places[p].cosets.rho[g.mul(s, tau)];
                let i = x_basis.iter().position(|&b| b == (p, rep)).unwrap();
                a[(i, j)] = Int::ONE;
            }
            a
        })
        .collect();
    let x = GModule::new_unchecked(g, FgAb::free(n), action);
    let incl = GMap::new_unchecked(x.clone(), y.clone(), incl);
    XYModules { y, x, aug, incl, y_offsets, x_basis }
}
