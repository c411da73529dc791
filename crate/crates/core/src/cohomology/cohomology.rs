use std::sync::Arc;

use crate::gmodule::{GMap, GModule};
use crate::int::Int;
use crate::lattice::{homology_at, AbMap, FgAb, Homology, IntMatrix, LatticeSolver};

use super::resolution::{tuple_index, CompleteResolution};
use super::CohomologyError;

/// Cochain group `T^i(M) = X_{-i-1} ⊗_G M`, one block of `M` per basis element.
pub fn cochain_group(res: &CompleteResolution, m: &GModule, i: i32) -> FgAb {
    let r = res.cochain_rank(i);
    let rel = m.ab().relations();
    if rel.cols() == 0 {
        return FgAb::free(r * m.ngens());
    }
    FgAb::new(r * m.ngens(), IntMatrix::block_diag(&vec![rel; r]))
}

/// Cochain for `i ≥ 0` from its values on `G^i` (tuples in index order).
pub fn cochain_from_values(values: &[Vec<Int>]) -> Vec<Int> {
    values.concat()
}

/// Value of a cochain on the basis tuple with index `b`.
pub fn cochain_value(m: &GModule, c: &[Int], b: usize) -> Vec<Int> {
    c[b * m.ngens()..(b + 1) * m.ngens()].to_vec()
}

/// The chain `[τ1..τk] ⊗ x` in Tate degree `-k-1`.
pub fn bar_chain(res: &CompleteResolution, m: &GModule, tuple: &[usize], x: &[Int]) -> Vec<Int> {
    let n = res.group().order();
    let k = m.ngens();
    let mut v = vec![Int::ZERO; n.pow(tuple.len() as u32) * k];
    let b = tuple_index(n, tuple);
    v[b * k..(b + 1) * k].clone_from_slice(x);
    v
}

struct Inner {
    degree: i32,
    module: GModule,
    chains: FgAb,
    d_prev: AbMap,
    d_next: AbMap,
    homology: Homology,
}

/// `Ĥ^i(G, M)` computed from a complete resolution.
#[derive(Clone)]
pub struct Cohomology(Arc<Inner>);

impl std::fmt::Debug for Cohomology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "H^{}({}) = {}", self.0.degree, self.0.module.group().name(), self.group().describe())
    }
}

pub fn cohomology(res: &CompleteResolution, m: &GModule, i: i32) -> Result<Cohomology, CohomologyError> {
    res.check_degree(i)?;
    if res.group() != m.group() {
        return Err(CohomologyError::GroupMismatch);
    }
    let prev = cochain_group(res, m, i - 1);
    let chains = cochain_group(res, m, i);
    let next = cochain_group(res, m, i + 1);
    let d_prev = AbMap::new_unchecked(prev, chains.clone(), res.cochain_differential(i - 1, m));
    let d_next = AbMap::new_unchecked(chains.clone(), next, res.cochain_differential(i, m));
    let homology = homology_at(&d_prev, &d_next)?;
    Ok(Cohomology(Arc::new(Inner { degree: i, module: m.clone(), chains, d_prev, d_next, homology })))
}

impl Cohomology {
    pub fn degree(&self) -> i32 {
        self.0.degree
    }

    pub fn module(&self) -> &GModule {
        &self.0.module
    }

    /// The cohomology group, canonically presented.
    pub fn group(&self) -> &FgAb {
        &self.0.homology.group
    }

    pub fn chains(&self) -> &FgAb {
        &self.0.chains
    }

    pub fn is_cocycle(&self, c: &[Int]) -> bool {
        self.0.homology.is_cycle(c)
    }

    pub fn is_coboundary(&self, c: &[Int]) -> bool {
        self.0.homology.is_boundary(c)
    }

    /// Canonical coordinates of the class of a cocycle.
    pub fn class_of(&self, c: &[Int]) -> Result<Vec<Int>, CohomologyError> {
        self.0.homology.class_of(c).map_err(|_| CohomologyError::NotACocycle)
    }

    pub fn rep_of(&self, h: &[Int]) -> Vec<Int> {
        self.0.homology.rep_of(h)
    }

    pub fn class(&self, c: &[Int]) -> Result<CohClass, CohomologyError> {
        self.class_of(c)?;
        Ok(CohClass { coh: self.clone(), rep: c.to_vec() })
    }

    pub fn class_from_coords(&self, h: &[Int]) -> CohClass {
        CohClass { coh: self.clone(), rep: self.rep_of(h) }
    }

    pub fn zero_class(&self) -> CohClass {
        CohClass { coh: self.clone(), rep: self.0.chains.zero() }
    }

    /// Classes of the canonical generators.
    pub fn generator_classes(&self) -> Vec<CohClass> {
        let k = self.group().canon_len();
        (0..k).map(|j| self.class_from_coords(&crate::lattice::matrix::unit(k, j))).collect()
    }

    pub fn coboundary(&self, x: &[Int]) -> Vec<Int> {
        self.0.d_prev.apply(x)
    }

    pub fn differential_out(&self) -> &AbMap {
        &self.0.d_next
    }

    pub fn differential_in(&self) -> &AbMap {
        &self.0.d_prev
    }

    /// The map `H^i(M) → H^i(N)` induced by `f`, on canonical coordinates.
    pub fn induced_map(&self, f: &GMap, target: &Cohomology) -> Result<AbMap, CohomologyError> {
        if target.degree() != self.degree() {
            return Err(CohomologyError::DegreeMismatch);
        }
        let k = self.group().canon_len();
        let cols: Vec<Vec<Int>> = (0..k)
            .map(|j| {
                let z = self.rep_of(&crate::lattice::matrix::unit(k, j));
                target.class_of(&apply_blockwise(f, &z))
            })
            .collect::<Result<_, _>>()?;
        let m = IntMatrix::from_cols(target.group().canon_len(), &cols);
        Ok(AbMap::new(self.group().clone(), target.group().clone(), m)?)
    }
}

/// Applies a module map to every block of a cochain.
pub fn apply_blockwise(f: &GMap, c: &[Int]) -> Vec<Int> {
    let (n, m) = (f.domain.ngens(), f.codomain.ngens());
    if n == 0 {
        return vec![];
    }
    let blocks = c.len() / n;
    let mut out = Vec::with_capacity(blocks * m);
    for b in 0..blocks {
        out.extend(f.apply(&c[b * n..(b + 1) * n]));
    }
    out
}

/// Element of a cohomology group with a cocycle representative.
#[derive(Clone, Debug)]
pub struct CohClass {
    coh: Cohomology,
    rep: Vec<Int>,
}

impl CohClass {
    pub fn degree(&self) -> i32 {
        self.coh.degree()
    }

    pub fn cohomology(&self) -> &Cohomology {
        &self.coh
    }

    pub fn rep(&self) -> &[Int] {
        &self.rep
    }

    pub fn coords(&self) -> Vec<Int> {
        self.coh.class_of(&self.rep).expect("representative is a cocycle")
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(Int::is_zero)
    }

    pub fn add(&self, other: &CohClass) -> CohClass {
        let rep = self.rep.iter().zip(&other.rep).map(|(a, b)| a + b).collect();
        CohClass { coh: self.coh.clone(), rep }
    }

    pub fn neg(&self) -> CohClass {
        CohClass { coh: self.coh.clone(), rep: self.rep.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: &Int) -> CohClass {
        CohClass { coh: self.coh.clone(), rep: self.rep.iter().map(|a| a * c).collect() }
    }

    pub fn same_class(&self, other: &CohClass) -> bool {
        self.coords() == other.coords()
    }
}

/// Decides whether a cochain in degree `i` is a coboundary, without building `T^{i+1}`.
pub fn is_coboundary(res: &CompleteResolution, m: &GModule, i: i32, c: &[Int]) -> bool {
    let d = res.cochain_differential(i - 1, m);
    let rel = cochain_group(res, m, i).relations().clone();
    LatticeSolver::new(&d.hcat(&rel)).contains(c)
}

/// Checks the cocycle condition in degree `i` directly.
pub fn is_cocycle(res: &CompleteResolution, m: &GModule, i: i32, c: &[Int]) -> bool {
    let y = res.cochain_differential(i, m).mul_vec(c);
    let k = m.ngens();
    (0..y.len() / k.max(1)).all(|b| m.is_zero(&y[b * k..(b + 1) * k]))
}
