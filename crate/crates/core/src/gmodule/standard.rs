use crate::groups::{cosets_and_reps, FiniteGroup, Subgroup};
use crate::int::Int;
use crate::lattice::{FgAb, IntMatrix};

use super::module::{GMap, GModule};

/// `Z[G]` with basis indexed by `G` and left translation.
pub fn regular(g: &FiniteGroup) -> GModule {
    let n = g.order();
    let action = g
        .elements()
        .map(|x| {
            let mut a = IntMatrix::zeros(n, n);
            for h in g.elements() {
                a[(g.mul(x, h), h)] = Int::ONE;
            }
            a
        })
        .collect();
    GModule::new_unchecked(g, FgAb::free(n), action)
}

/// `Z` with trivial action.
pub fn trivial_z(g: &FiniteGroup) -> GModule {
    GModule::trivial(g, FgAb::free(1))
}

/// Permutation module on the left cosets `G/H`, basis ordered as the coset representatives.
pub fn induced(g: &FiniteGroup, h: &Subgroup) -> GModule {
    let c = cosets_and_reps(g, h);
    let k = c.reps.len();
    let action = g
        .elements()
        .map(|x| {
            let mut a = IntMatrix::zeros(k, k);
            for (j, &r) in c.reps.iter().enumerate() {
                a[(c.rep_index(g.mul(x, r)), j)] = Int::ONE;
            }
            a
        })
        .collect();
    GModule::new_unchecked(g, FgAb::free(k), action)
}

/// Augmentation `Z[G] → Z`.
pub fn augmentation(g: &FiniteGroup) -> GMap {
    let n = g.order();
    GMap::new_unchecked(regular(g), trivial_z(g), IntMatrix::from_rows(vec![vec![Int::ONE; n]]))
}

/// `ΔG` with basis `g − 1` (`g ≠ 1`, in index order) and its inclusion into `Z[G]`.
pub fn aug_ideal(g: &FiniteGroup) -> (GModule, GMap) {
    let n = g.order();
    let e = g.identity();
    let basis: Vec<usize> = g.elements().filter(|&x| x != e).collect();
    let pos = |x: usize| basis.iter().position(|&b| b == x);
    let mut incl = IntMatrix::zeros(n, basis.len());
    for (j, &b) in basis.iter().enumerate() {
        incl[(b, j)] = Int::ONE;
        incl[(e, j)] = Int::from(-1);
    }
    let action = g
        .elements()
        .map(|x| {
            // x(b − 1) = (xb − 1) − (x − 1)
            let mut a = IntMatrix::zeros(basis.len(), basis.len());
            for (j, &b) in basis.iter().enumerate() {
                if let Some(p) = pos(g.mul(x, b)) {
                    a[(p, j)] += Int::ONE;
                }
                if let Some(p) = pos(x) {
                    a[(p, j)] -= Int::ONE;
                }
            }
            a
        })
        .collect();
    let m = GModule::new_unchecked(g, FgAb::free(basis.len()), action);
    (m.clone(), GMap::new_unchecked(m, regular(g), incl))
}

/// The left ideal `Z[G]·ΔH`, spanned by `g(h − 1)`, with its inclusion into `Z[G]`.
pub fn local_aug_ideal(g: &FiniteGroup, h: &Subgroup) -> (GModule, GMap) {
    let reg = regular(g);
    let span = local_aug_spanning_set(g, h);
    reg.submodule_of_stable(&span).expect("left ideal is stable")
}

/// The spanning set `{g(h − 1)}` of `Z[G]·ΔH` as columns, ordered by `(g, h)`.
pub fn local_aug_spanning_set(g: &FiniteGroup, h: &Subgroup) -> IntMatrix {
    let n = g.order();
    let mut cols = Vec::new();
    for x in g.elements() {
        for &y in h.elements() {
            if y == g.identity() {
                continue;
            }
            let mut v = vec![Int::ZERO; n];
            v[g.mul(x, y)] += Int::ONE;
            v[x] -= Int::ONE;
            cols.push(v);
        }
    }
    IntMatrix::from_cols(n, &cols)
}

/// The standard modules attached to `H ≤ G`.
pub struct StandardModules {
    pub regular: GModule,
    pub trivial: GModule,
    pub induced: GModule,
    pub aug_ideal: (GModule, GMap),
    pub local_aug_ideal: (GModule, GMap),
}

pub fn standard_modules(g: &FiniteGroup, h: &Subgroup) -> StandardModules {
    StandardModules {
        regular: regular(g),
        trivial: trivial_z(g),
        induced: induced(g, h),
        aug_ideal: aug_ideal(g),
        local_aug_ideal: local_aug_ideal(g, h),
    }
}
