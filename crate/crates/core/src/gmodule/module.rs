use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::groups::{FiniteGroup, GroupError, Subgroup};
use crate::int::Int;
use crate::lattice::{column_hnf, AbMap, FgAb, IntMatrix, LatticeError, LatticeSolver, Preimager};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GModuleError {
    #[error("action axiom fails: {0}")]
    InvalidAction(String),
    #[error("map is not equivariant: group element {group_element}, generator {generator}")]
    NotEquivariant { group_element: usize, generator: usize },
    #[error("module is not Z-free")]
    NotFree,
    #[error("tensor product of two infinite non-free modules is not supported")]
    UnsupportedTensor,
    #[error("elements do not span a G-stable subgroup")]
    NotStable,
    #[error("modules are over different groups")]
    GroupMismatch,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

struct Inner {
    group: FiniteGroup,
    ab: FgAb,
    action: Vec<IntMatrix>,
}

/// A finitely generated abelian group with a left action of a finite group.
///
/// `action[g]` is the matrix of `g` on presentation generators.
#[derive(Clone)]
pub struct GModule(Arc<Inner>);

impl fmt::Debug for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GModule({} over {})", self.0.ab.describe(), self.0.group.name())
    }
}

impl GModule {
    /// Validates the action on a generating set of the group (which implies it for all pairs).
    pub fn new(group: &FiniteGroup, ab: FgAb, action: Vec<IntMatrix>) -> Result<GModule, GModuleError> {
        let m = GModule::new_unchecked(group, ab, action);
        m.check_action(&group.generators())?;
        Ok(m)
    }

    pub fn new_unchecked(group: &FiniteGroup, ab: FgAb, action: Vec<IntMatrix>) -> GModule {
        assert_eq!(action.len(), group.order(), "one action matrix per group element");
        GModule(Arc::new(Inner { group: group.clone(), ab, action }))
    }

    fn check_action(&self, hs: &[usize]) -> Result<(), GModuleError> {
        let (g, ab, n) = (&self.0.group, &self.0.ab, self.0.ab.ngens());
        for (k, a) in self.0.action.iter().enumerate() {
            if a.rows() != n || a.cols() != n {
                return Err(GModuleError::InvalidAction(format!("matrix of element {k} has wrong shape")));
            }
            AbMap::new(ab.clone(), ab.clone(), a.clone())
                .map_err(|e| GModuleError::InvalidAction(format!("element {k}: {e}")))?;
        }
        let e = &self.0.action[g.identity()];
        for j in 0..n {
            if !ab.eq_elems(&e.col(j), &ab.gen(j)) {
                return Err(GModuleError::InvalidAction(format!("identity moves generator {j}")));
            }
        }
        for x in g.elements() {
            for &h in hs {
                let lhs = &self.0.action[g.mul(x, h)];
                let rhs = self.0.action[x].mul(&self.0.action[h]);
                for j in 0..n {
                    if !ab.eq_elems(&lhs.col(j), &rhs.col(j)) {
                        return Err(GModuleError::InvalidAction(format!(
                            "action({x}*{h}) != action({x})action({h}) on generator {j}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks the action axioms for all pairs of group elements.
    pub fn verify_axioms(&self) -> Result<(), GModuleError> {
        self.check_action(&self.0.group.elements().collect::<Vec<_>>())
    }

    /// `A` with trivial action.
    pub fn trivial(group: &FiniteGroup, ab: FgAb) -> GModule {
        let id = IntMatrix::identity(ab.ngens());
        GModule::new_unchecked(group, ab, vec![id; group.order()])
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.0.group
    }

    pub fn ab(&self) -> &FgAb {
        &self.0.ab
    }

    pub fn ngens(&self) -> usize {
        self.0.ab.ngens()
    }

    pub fn action(&self, g: usize) -> &IntMatrix {
        &self.0.action[g]
    }

    pub fn actions(&self) -> &[IntMatrix] {
        &self.0.action
    }

    pub fn act(&self, g: usize, x: &[Int]) -> Vec<Int> {
        self.0.action[g].mul_vec(x)
    }

    pub fn is_free(&self) -> bool {
        self.0.ab.is_free()
    }

    pub fn is_finite(&self) -> bool {
        self.0.ab.is_finite()
    }

    pub fn zero(&self) -> Vec<Int> {
        self.0.ab.zero()
    }

    pub fn is_zero(&self, x: &[Int]) -> bool {
        self.0.ab.is_zero(x)
    }

    pub fn eq_elems(&self, x: &[Int], y: &[Int]) -> bool {
        self.0.ab.eq_elems(x, y)
    }

    /// Matrix of the norm element `Σ g`.
    pub fn norm_matrix(&self) -> IntMatrix {
        let n = self.ngens();
        self.0.action.iter().fold(IntMatrix::zeros(n, n), |acc, a| acc.add(a))
    }

    pub fn norm(&self, x: &[Int]) -> Vec<Int> {
        self.norm_matrix().mul_vec(x)
    }

    /// Action on canonical coordinates of the underlying group.
    pub fn canonical_action(&self, g: usize) -> IntMatrix {
        AbMap::new_unchecked(self.ab().clone(), self.ab().clone(), self.action(g).clone()).canonical_matrix()
    }

    /// Same module in canonical presentation, with the two isomorphisms.
    pub fn minimal(&self) -> (GModule, GMap, GMap) {
        let (m, to, from) = self.0.ab.minimal();
        let action = self
            .0
            .action
            .iter()
            .map(|a| {
                let b = to.matrix.mul(a).mul(&from.matrix);
                reduce_cols(&m, &b)
            })
            .collect();
        let mm = GModule::new_unchecked(&self.0.group, m, action);
        let to = GMap::new_unchecked(self.clone(), mm.clone(), to.matrix);
        let from = GMap::new_unchecked(mm.clone(), self.clone(), from.matrix);
        (mm, to, from)
    }

    pub fn direct_sum(parts: &[GModule]) -> Result<(GModule, Vec<GMap>, Vec<GMap>), GModuleError> {
        let group = parts.first().map(|p| p.group().clone()).ok_or(GModuleError::GroupMismatch)?;
        if parts.iter().any(|p| p.group() != &group) {
            return Err(GModuleError::GroupMismatch);
        }
        let ab = FgAb::direct_sum(&parts.iter().map(|p| p.ab().clone()).collect::<Vec<_>>());
        let action = group
            .elements()
            .map(|g| IntMatrix::block_diag(&parts.iter().map(|p| p.action(g)).collect::<Vec<_>>()))
            .collect();
        let sum = GModule::new_unchecked(&group, ab, action);
        let total = sum.ngens();
        let (mut inj, mut proj, mut off) = (vec![], vec![], 0);
        for p in parts {
            let mut i = IntMatrix::zeros(total, p.ngens());
            for k in 0..p.ngens() {
                i[(off + k, k)] = Int::ONE;
            }
            proj.push(GMap::new_unchecked(sum.clone(), p.clone(), i.transpose()));
            inj.push(GMap::new_unchecked(p.clone(), sum.clone(), i));
            off += p.ngens();
        }
        Ok((sum, inj, proj))
    }

    /// Restriction to a subgroup `H`, as a module over `H` viewed as a group.
    pub fn restrict(&self, h: &Subgroup) -> GModule {
        let (hg, _) = h.as_group();
        let action = h.elements().iter().map(|&x| self.action(x).clone()).collect();
        GModule::new_unchecked(&hg, self.ab().clone(), action)
    }

    /// All `g·x` for the columns `x` of `gens`.
    pub fn orbit_span(&self, gens: &IntMatrix) -> IntMatrix {
        let mut cols = Vec::new();
        for g in self.group().elements() {
            for c in gens.columns() {
                cols.push(self.act(g, &c));
            }
        }
        IntMatrix::from_cols(self.ngens(), &cols)
    }

    /// Submodule generated by the columns of `gens` and their translates, with its inclusion.
    ///
    /// Over a free module the basis is the Hermite basis of the span.
    pub fn submodule(&self, gens: &IntMatrix) -> (GModule, GMap) {
        self.submodule_of_stable(&self.orbit_span(gens)).expect("orbit span is stable")
    }

    /// Submodule spanned by the columns of `gens`, which must already be G-stable.
    pub fn submodule_of_stable(&self, gens: &IntMatrix) -> Result<(GModule, GMap), GModuleError> {
        let g = self.group();
        if self.is_free() {
            let hnf = column_hnf(gens, false);
            let basis = hnf.basis();
            let mut action = Vec::with_capacity(g.order());
            for x in g.elements() {
                let img = self.action(x).mul(&basis);
                let mut a = IntMatrix::zeros(basis.cols(), basis.cols());
                for j in 0..basis.cols() {
                    let c = hnf.coords_in_basis(&img.col(j)).ok_or(GModuleError::NotStable)?;
                    a.set_col(j, &c);
                }
                action.push(a);
            }
            let sub = GModule::new_unchecked(g, FgAb::free(basis.cols()), action);
            return Ok((sub.clone(), GMap::new_unchecked(sub, self.clone(), basis)));
        }
        let (sab, incl) = self.ab().subgroup(gens);
        let pre = AbMap::new_unchecked(sab.clone(), self.ab().clone(), incl.matrix.clone()).preimager();
        let mut action = Vec::with_capacity(g.order());
        for x in g.elements() {
            let img = self.action(x).mul(&incl.matrix);
            let mut a = IntMatrix::zeros(sab.ngens(), sab.ngens());
            for j in 0..sab.ngens() {
                let c = pre.preimage(&img.col(j)).ok_or(GModuleError::NotStable)?;
                a.set_col(j, &sab.reduce_canon(&c));
            }
            action.push(a);
        }
        let sub = GModule::new_unchecked(g, sab, action);
        Ok((sub.clone(), GMap::new_unchecked(sub, self.clone(), incl.matrix)))
    }

    /// Quotient by the submodule generated by the columns of `gens`, with the projection.
    pub fn quotient(&self, gens: &IntMatrix) -> (GModule, GMap) {
        let span = self.orbit_span(gens);
        let pres = FgAb::new(self.ngens(), self.ab().relations().hcat(&span));
        let q = GModule::new_unchecked(self.group(), pres, self.0.action.clone());
        let (qm, to, _) = q.minimal();
        (qm.clone(), GMap::new_unchecked(self.clone(), qm, to.ab.matrix))
    }
}

fn reduce_cols(m: &FgAb, b: &IntMatrix) -> IntMatrix {
    let cols: Vec<Vec<Int>> = (0..b.cols()).map(|j| m.reduce_canon(&b.col(j))).collect();
    IntMatrix::from_cols(b.rows(), &cols)
}

/// An equivariant homomorphism of G-modules.
#[derive(Clone, Debug)]
pub struct GMap {
    pub domain: GModule,
    pub codomain: GModule,
    pub ab: AbMap,
}

impl GMap {
    /// Checks well-definedness and equivariance (on group generators).
    pub fn new(domain: GModule, codomain: GModule, matrix: IntMatrix) -> Result<GMap, GModuleError> {
        if domain.group() != codomain.group() {
            return Err(GModuleError::GroupMismatch);
        }
        let ab = AbMap::new(domain.ab().clone(), codomain.ab().clone(), matrix)?;
        let f = GMap { domain, codomain, ab };
        f.check_equivariance(&f.domain.group().generators())?;
        Ok(f)
    }

    pub fn new_unchecked(domain: GModule, codomain: GModule, matrix: IntMatrix) -> GMap {
        let ab = AbMap::new_unchecked(domain.ab().clone(), codomain.ab().clone(), matrix);
        GMap { domain, codomain, ab }
    }

    fn check_equivariance(&self, gs: &[usize]) -> Result<(), GModuleError> {
        for &g in gs {
            let lhs = self.ab.matrix.mul(self.domain.action(g));
            let rhs = self.codomain.action(g).mul(&self.ab.matrix);
            for j in 0..self.domain.ngens() {
                if !self.codomain.eq_elems(&lhs.col(j), &rhs.col(j)) {
                    return Err(GModuleError::NotEquivariant { group_element: g, generator: j });
                }
            }
        }
        Ok(())
    }

    /// Checks equivariance for every group element.
    pub fn verify_equivariance(&self) -> Result<(), GModuleError> {
        self.check_equivariance(&self.domain.group().elements().collect::<Vec<_>>())
    }

    pub fn identity(m: &GModule) -> GMap {
        GMap::new_unchecked(m.clone(), m.clone(), IntMatrix::identity(m.ngens()))
    }

    pub fn zero(a: &GModule, b: &GModule) -> GMap {
        GMap::new_unchecked(a.clone(), b.clone(), IntMatrix::zeros(b.ngens(), a.ngens()))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.ab.matrix
    }

    pub fn apply(&self, x: &[Int]) -> Vec<Int> {
        self.ab.apply(x)
    }

    /// `other ∘ self`
    pub fn then(&self, other: &GMap) -> GMap {
        GMap { domain: self.domain.clone(), codomain: other.codomain.clone(), ab: self.ab.then(&other.ab) }
    }

    pub fn is_zero(&self) -> bool {
        self.ab.is_zero()
    }

    pub fn equals(&self, other: &GMap) -> bool {
        self.ab.equals(&other.ab)
    }

    pub fn kernel(&self) -> (GModule, GMap) {
        let (_, incl) = self.ab.kernel();
        self.domain.submodule_of_stable(&incl.matrix).expect("kernels are stable")
    }

    pub fn image(&self) -> (GModule, GMap) {
        self.codomain.submodule_of_stable(&self.ab.matrix).expect("images are stable")
    }

    pub fn cokernel(&self) -> (GModule, GMap) {
        self.codomain.quotient(&self.ab.matrix)
    }

    pub fn is_injective(&self) -> bool {
        self.ab.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        self.ab.is_surjective()
    }

    pub fn preimager(&self) -> Preimager {
        self.ab.preimager()
    }

    /// The unique map `h` with `inj ∘ h = self`, when `inj` is injective and contains the image.
    pub fn factor_through(&self, inj: &GMap) -> Result<GMap, GModuleError> {
        let pre = inj.preimager();
        let mut m = IntMatrix::zeros(inj.domain.ngens(), self.domain.ngens());
        for j in 0..self.domain.ngens() {
            let x = pre.preimage(&self.ab.matrix.col(j)).ok_or(LatticeError::NotInImage)?;
            m.set_col(j, &inj.domain.ab().normalize(&x));
        }
        GMap::new(self.domain.clone(), inj.domain.clone(), m)
    }
}

/// Checks exactness of `A --f--> B --g--> C` at `B`.
pub fn is_exact_at(f: &GMap, g: &GMap) -> bool {
    match crate::lattice::homology_at(&f.ab, &g.ab) {
        Ok(h) => h.group.is_trivial(),
        Err(_) => false,
    }
}

/// Checks exactness of `0 → A → B → C → 0`.
pub fn is_short_exact(i: &GMap, p: &GMap) -> bool {
    i.is_injective() && p.is_surjective() && is_exact_at(i, p)
}

/// Solver for `x = Σ c_j gens_j` inside a module (modulo relations).
pub struct SpanSolver {
    k: usize,
    solver: LatticeSolver,
}

impl SpanSolver {
    pub fn new(m: &GModule, gens: &IntMatrix) -> SpanSolver {
        SpanSolver { k: gens.cols(), solver: LatticeSolver::new(&gens.hcat(m.ab().relations())) }
    }

    pub fn solve(&self, x: &[Int]) -> Option<Vec<Int>> {
        self.solver.solve(x).map(|mut v| {
            v.truncate(self.k);
            v
        })
    }
}
