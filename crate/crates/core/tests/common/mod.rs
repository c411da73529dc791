#![allow(dead_code)]

use tatelab_core::gmodule::*;
use tatelab_core::groups::{FiniteGroup, Subgroup};
use tatelab_core::lattice::FgAb;
use tatelab_core::Int;

pub fn g(name: &str) -> FiniteGroup {
    FiniteGroup::named(name).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn z_mod(grp: &FiniteGroup, m: i64) -> GModule {
    GModule::trivial(grp, FgAb::cyclic(m))
}

/// Small modules indexed by `k`: lattices for `k` even-ish, finite ones otherwise.
pub fn sample_module(grp: &FiniteGroup, k: usize) -> GModule {
    let subs = grp.small_subgroups();
    let h = &subs[k / 7 % subs.len()];
    let m = match k % 7 {
        0 => trivial_z(grp),
        1 => regular(grp),
        2 => aug_ideal(grp).0,
        3 => induced(grp, h),
        4 => local_aug_ideal(grp, h).0,
        5 => GModule::direct_sum(&[aug_ideal(grp).0, induced(grp, h)]).unwrap().0,
        _ => GModule::direct_sum(&[trivial_z(grp), trivial_z(grp)]).unwrap().0,
    };
    if m.ngens() == 0 {
        return trivial_z(grp);
    }
    m
}

/// Finite module `M / qM` for a sample lattice `M`.
pub fn sample_finite_module(grp: &FiniteGroup, k: usize, q: i64) -> GModule {
    tensor(&sample_module(grp, k), &z_mod(grp, q)).unwrap()
}

pub fn subgroup(grp: &FiniteGroup, gens: &[usize]) -> Subgroup {
    Subgroup::generated(grp, gens)
}
