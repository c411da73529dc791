//! Finitely generated abelian groups given by presentations.

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::int::Int;
use crate::lattice::echelon::{column_hnf, ColumnHnf, LatticeSolver};
use crate::lattice::matrix::{vec_is_zero, IntMatrix};
use crate::lattice::snf::smith_left;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matrix does not define a homomorphism: {0}")]
    InvalidMap(String),
    #[error("composite of consecutive maps is not zero")]
    NotAComplex,
    #[error("elements do not generate the group")]
    NotSpanning,
    #[error("element is not in the image")]
    NotInImage,
    #[error("element is not a cycle")]
    NotACycle,
    #[error("group is infinite")]
    Infinite,
}

#[derive(Debug)]
struct NormalForm {
    factors: Vec<Int>,
    free_rank: usize,
    to_canon: IntMatrix,
    from_canon: IntMatrix,
}

#[derive(Debug)]
struct Inner {
    ngens: usize,
    relations: IntMatrix,
    nf: OnceLock<NormalForm>,
    rel_hnf: OnceLock<ColumnHnf>,
}

/// `Z^n / (column span of R)`, with a lazily computed Smith normal form.
///
/// Elements are vectors of length `n`. Canonical coordinates are the
/// coordinates against the invariant-factor decomposition
/// `Z/d_1 ⊕ ... ⊕ Z/d_t ⊕ Z^r` (`1 < d_1 | ... | d_t`), torsion parts reduced.
#[derive(Clone)]
pub struct FgAb(Arc<Inner>);

impl fmt::Debug for FgAb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAb({})", self.describe())
    }
}

impl FgAb {
    pub fn new(ngens: usize, relations: IntMatrix) -> FgAb {
        assert_eq!(relations.rows(), ngens, "relation matrix must have one row per generator");
        FgAb(Arc::new(Inner { ngens, relations, nf: OnceLock::new(), rel_hnf: OnceLock::new() }))
    }

    pub fn free(n: usize) -> FgAb {
        FgAb::new(n, IntMatrix::zeros(n, 0))
    }

    pub fn trivial() -> FgAb {
        FgAb::free(0)
    }

    pub fn cyclic(m: impl Into<Int>) -> FgAb {
        FgAb::from_orders(&[m.into()])
    }

    /// One generator per entry, generator `i` of order `orders[i]` (0 for infinite order).
    pub fn from_orders(orders: &[Int]) -> FgAb {
        let nz: Vec<usize> = (0..orders.len()).filter(|&i| !orders[i].is_zero()).collect();
        let mut r = IntMatrix::zeros(orders.len(), nz.len());
        for (k, &i) in nz.iter().enumerate() {
            r[(i, k)] = orders[i].abs();
        }
        FgAb::new(orders.len(), r)
    }

    /// The canonical group `Z/d_1 ⊕ ... ⊕ Z/d_t ⊕ Z^r` in its standard presentation.
    pub fn canonical(factors: &[Int], free_rank: usize) -> FgAb {
        let mut orders = factors.to_vec();
        orders.extend(std::iter::repeat_n(Int::ZERO, free_rank));
        FgAb::from_orders(&orders)
    }

    pub fn direct_sum(parts: &[FgAb]) -> FgAb {
        let rels: Vec<&IntMatrix> = parts.iter().map(|p| p.relations()).collect();
        let n = parts.iter().map(FgAb::ngens).sum();
        FgAb::new(n, IntMatrix::block_diag(&rels))
    }

    pub fn ngens(&self) -> usize {
        self.0.ngens
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.0.relations
    }

    pub fn is_free(&self) -> bool {
        self.0.relations.is_zero()
    }

    fn nf(&self) -> &NormalForm {
        self.0.nf.get_or_init(|| {
            let n = self.0.ngens;
            let r = &self.0.relations;
            if r.is_zero() {
                return NormalForm {
                    factors: vec![],
                    free_rank: n,
                    to_canon: IntMatrix::identity(n),
                    from_canon: IntMatrix::identity(n),
                };
            }
            let (diag, u, u_inv) = smith_left(r);
            let d = |i: usize| diag.get(i).cloned().unwrap_or(Int::ZERO);
            let keep: Vec<usize> = (0..n).filter(|&i| !d(i).is_one()).collect();
            let factors: Vec<Int> = keep.iter().map(|&i| d(i)).filter(|x| !x.is_zero()).collect();
            let free_rank = keep.len() - factors.len();
            let mut to_canon = u.select_rows(&keep);
            for (k, f) in factors.iter().enumerate() {
                for x in to_canon.row_mut(k) {
                    *x = x.mod_floor(f);
                }
            }
            NormalForm { factors, free_rank, to_canon, from_canon: u_inv.select_cols(&keep) }
        })
    }

    fn rel_hnf(&self) -> &ColumnHnf {
        self.0.rel_hnf.get_or_init(|| column_hnf(&self.0.relations, false))
    }

    /// Invariant factors greater than one.
    pub fn factors(&self) -> &[Int] {
        &self.nf().factors
    }

    pub fn free_rank(&self) -> usize {
        self.nf().free_rank
    }

    /// Number of canonical coordinates.
    pub fn canon_len(&self) -> usize {
        self.factors().len() + self.free_rank()
    }

    pub fn to_canon_matrix(&self) -> &IntMatrix {
        &self.nf().to_canon
    }

    pub fn from_canon_matrix(&self) -> &IntMatrix {
        &self.nf().from_canon
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.canon_len() == 0
    }

    pub fn order(&self) -> Option<Int> {
        self.is_finite().then(|| self.factors().iter().fold(Int::ONE, |a, b| &a * b))
    }

    /// Invariant factors followed by `free_rank` zeros.
    pub fn invariants(&self) -> Vec<Int> {
        let mut v = self.factors().to_vec();
        v.extend(std::iter::repeat_n(Int::ZERO, self.free_rank()));
        v
    }

    pub fn isomorphic(&self, other: &FgAb) -> bool {
        self.factors() == other.factors() && self.free_rank() == other.free_rank()
    }

    /// Human-readable structure, e.g. `Z/2 + Z/4 + Z^3`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.factors().iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank() {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn zero(&self) -> Vec<Int> {
        vec![Int::ZERO; self.ngens()]
    }

    pub fn gen(&self, i: usize) -> Vec<Int> {
        crate::lattice::matrix::unit(self.ngens(), i)
    }

    /// Reduces canonical coordinates into standard range.
    pub fn reduce_canon(&self, c: &[Int]) -> Vec<Int> {
        let f = self.factors();
        c.iter().enumerate().map(|(i, x)| if i < f.len() { x.mod_floor(&f[i]) } else { x.clone() }).collect()
    }

    pub fn canon(&self, x: &[Int]) -> Vec<Int> {
        assert_eq!(x.len(), self.ngens(), "element length mismatch");
        if self.is_free() {
            return x.to_vec();
        }
        self.reduce_canon(&self.to_canon_matrix().mul_vec(x))
    }

    pub fn from_canon(&self, c: &[Int]) -> Vec<Int> {
        if self.is_free() {
            return c.to_vec();
        }
        self.from_canon_matrix().mul_vec(&self.reduce_canon(c))
    }

    /// Representative of `x` in the image of `from_canon`.
    pub fn normalize(&self, x: &[Int]) -> Vec<Int> {
        self.from_canon(&self.canon(x))
    }

    pub fn is_zero(&self, x: &[Int]) -> bool {
        if self.is_free() {
            return vec_is_zero(x);
        }
        if self.0.nf.get().is_none() && self.ngens() > 64 {
            return self.rel_hnf().coords_in_basis(x).is_some();
        }
        vec_is_zero(&self.canon(x))
    }

    pub fn eq_elems(&self, x: &[Int], y: &[Int]) -> bool {
        self.is_zero(&crate::lattice::matrix::vec_sub(x, y))
    }

    /// Order of an element (`None` if infinite).
    pub fn element_order(&self, x: &[Int]) -> Option<Int> {
        let c = self.canon(x);
        let f = self.factors();
        let mut ord = Int::ONE;
        for (i, ci) in c.iter().enumerate() {
            if i >= f.len() {
                if !ci.is_zero() {
                    return None;
                }
            } else if !ci.is_zero() {
                ord = ord.lcm(&f[i].div_exact(&f[i].gcd(ci)));
            }
        }
        Some(ord)
    }

    /// All canonical coordinate vectors of a finite group.
    pub fn canonical_elements(&self) -> Result<Vec<Vec<Int>>, LatticeError> {
        if !self.is_finite() {
            return Err(LatticeError::Infinite);
        }
        let mut out = vec![vec![]];
        for f in self.factors() {
            let m = f.to_i64().expect("group too large to enumerate");
            let mut next = Vec::with_capacity(out.len() * m as usize);
            for v in &out {
                for k in 0..m {
                    let mut w = v.clone();
                    w.push(Int::from(k));
                    next.push(w);
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// All elements of a finite group as presentation vectors.
    pub fn elements(&self) -> Result<Vec<Vec<Int>>, LatticeError> {
        Ok(self.canonical_elements()?.iter().map(|c| self.from_canon(c)).collect())
    }

    /// Canonical presentation of the same group with the two isomorphisms.
    pub fn minimal(&self) -> (FgAb, AbMap, AbMap) {
        let m = FgAb::canonical(self.factors(), self.free_rank());
        let to = AbMap::new_unchecked(self.clone(), m.clone(), self.to_canon_matrix().clone());
        let from = AbMap::new_unchecked(m.clone(), self.clone(), self.from_canon_matrix().clone());
        (m, to, from)
    }

    /// Subgroup generated by the columns of `gens`, in canonical presentation, with its inclusion.
    pub fn subgroup(&self, gens: &IntMatrix) -> (FgAb, AbMap) {
        assert_eq!(gens.rows(), self.ngens());
        let k = gens.cols();
        let ker = crate::lattice::echelon::kernel(&gens.hcat(self.relations()));
        let rel = ker.submatrix(0..k, 0..ker.cols());
        let pres = FgAb::new(k, rel);
        let sub = FgAb::canonical(pres.factors(), pres.free_rank());
        let incl = gens.mul(pres.from_canon_matrix());
        (sub.clone(), AbMap::new_unchecked(sub, self.clone(), incl))
    }

    /// Quotient by the subgroup generated by the columns of `gens`, with the projection.
    pub fn quotient(&self, gens: &IntMatrix) -> (FgAb, AbMap) {
        let pres = FgAb::new(self.ngens(), self.relations().hcat(gens));
        let q = FgAb::canonical(pres.factors(), pres.free_rank());
        let proj = pres.to_canon_matrix().clone();
        (q.clone(), AbMap::new_unchecked(self.clone(), q, proj))
    }
}

/// Homomorphism between presented groups, as a matrix on generators.
#[derive(Clone, Debug)]
pub struct AbMap {
    pub domain: FgAb,
    pub codomain: FgAb,
    pub matrix: IntMatrix,
}

impl AbMap {
    /// Checks that every domain relation is sent to zero.
    pub fn new(domain: FgAb, codomain: FgAb, matrix: IntMatrix) -> Result<AbMap, LatticeError> {
        if matrix.rows() != codomain.ngens() || matrix.cols() != domain.ngens() {
            return Err(LatticeError::InvalidMap(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                codomain.ngens(),
                domain.ngens()
            )));
        }
        let img = matrix.mul(domain.relations());
        for j in 0..img.cols() {
            if !codomain.is_zero(&img.col(j)) {
                return Err(LatticeError::InvalidMap(format!("relation {j} is not sent to zero")));
            }
        }
        Ok(AbMap { domain, codomain, matrix })
    }

    pub fn new_unchecked(domain: FgAb, codomain: FgAb, matrix: IntMatrix) -> AbMap {
        debug_assert_eq!(matrix.rows(), codomain.ngens());
        debug_assert_eq!(matrix.cols(), domain.ngens());
        AbMap { domain, codomain, matrix }
    }

    pub fn identity(a: &FgAb) -> AbMap {
        AbMap::new_unchecked(a.clone(), a.clone(), IntMatrix::identity(a.ngens()))
    }

    pub fn zero(a: &FgAb, b: &FgAb) -> AbMap {
        AbMap::new_unchecked(a.clone(), b.clone(), IntMatrix::zeros(b.ngens(), a.ngens()))
    }

    /// The map sending `span[:, j]` to `images[:, j]`.
    ///
    /// Fails if the span does not generate the domain or if a relation among the
    /// spanning elements is not respected.
    pub fn from_spanning_images(
        domain: FgAb,
        span: &IntMatrix,
        images: &IntMatrix,
        codomain: FgAb,
    ) -> Result<AbMap, LatticeError> {
        assert_eq!(span.cols(), images.cols());
        let k = span.cols();
        let full = span.hcat(domain.relations());
        let hnf = column_hnf(&full, true);
        let ker = hnf.kernel();
        let coeff = ker.submatrix(0..k, 0..ker.cols());
        let rel_img = images.mul(&coeff);
        for j in 0..rel_img.cols() {
            if !codomain.is_zero(&rel_img.col(j)) {
                return Err(LatticeError::InvalidMap(format!("spanning relation {j} is not respected")));
            }
        }
        let mut m = IntMatrix::zeros(codomain.ngens(), domain.ngens());
        for i in 0..domain.ngens() {
            let x = hnf.solve(&domain.gen(i)).ok_or(LatticeError::NotSpanning)?;
            m.set_col(i, &images.mul_vec(&x[..k]));
        }
        Ok(AbMap { domain, codomain, matrix: m })
    }

    pub fn apply(&self, x: &[Int]) -> Vec<Int> {
        self.matrix.mul_vec(x)
    }

    /// `other ∘ self`
    pub fn then(&self, other: &AbMap) -> AbMap {
        AbMap::new_unchecked(self.domain.clone(), other.codomain.clone(), other.matrix.mul(&self.matrix))
    }

    pub fn is_zero(&self) -> bool {
        (0..self.domain.ngens()).all(|j| self.codomain.is_zero(&self.matrix.col(j)))
    }

    pub fn equals(&self, other: &AbMap) -> bool {
        (0..self.domain.ngens()).all(|j| self.codomain.eq_elems(&self.matrix.col(j), &other.matrix.col(j)))
    }

    /// Matrix on canonical coordinates.
    pub fn canonical_matrix(&self) -> IntMatrix {
        let m = self.codomain.to_canon_matrix().mul(&self.matrix).mul(self.domain.from_canon_matrix());
        let cols: Vec<Vec<Int>> = (0..m.cols()).map(|j| self.codomain.reduce_canon(&m.col(j))).collect();
        IntMatrix::from_cols(m.rows(), &cols)
    }

    pub fn kernel(&self) -> (FgAb, AbMap) {
        let n = self.domain.ngens();
        let ker = crate::lattice::echelon::kernel(&self.matrix.hcat(self.codomain.relations()));
        self.domain.subgroup(&ker.submatrix(0..n, 0..ker.cols()))
    }

    pub fn image(&self) -> (FgAb, AbMap) {
        self.codomain.subgroup(&self.matrix)
    }

    pub fn cokernel(&self) -> (FgAb, AbMap) {
        self.codomain.quotient(&self.matrix)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().0.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().0.is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn preimager(&self) -> Preimager {
        Preimager {
            n: self.domain.ngens(),
            solver: LatticeSolver::new(&self.matrix.hcat(self.codomain.relations())),
        }
    }

    pub fn preimage(&self, y: &[Int]) -> Option<Vec<Int>> {
        self.preimager().preimage(y)
    }
}

/// Repeated preimage computation for a fixed map.
#[derive(Clone, Debug)]
pub struct Preimager {
    n: usize,
    solver: LatticeSolver,
}

impl Preimager {
    pub fn preimage(&self, y: &[Int]) -> Option<Vec<Int>> {
        self.solver.solve(y).map(|mut x| {
            x.truncate(self.n);
            x
        })
    }
}

/// Homology `ker(d_out) / im(d_in)` at the middle group.
#[derive(Clone, Debug)]
pub struct Homology {
    pub group: FgAb,
    cycles: ColumnHnf,
    pres: FgAb,
    boundaries: ColumnHnf,
    d_out: AbMap,
}

impl Homology {
    /// Lattice basis of the cycles (columns), in middle-group coordinates.
    pub fn cycle_basis(&self) -> IntMatrix {
        self.cycles.basis()
    }

    pub fn is_cycle(&self, z: &[Int]) -> bool {
        self.d_out.codomain.is_zero(&self.d_out.apply(z))
    }

    pub fn is_boundary(&self, z: &[Int]) -> bool {
        self.boundaries.coords_in_basis(z).is_some()
    }

    /// Canonical coordinates of the class of a cycle.
    pub fn class_of(&self, z: &[Int]) -> Result<Vec<Int>, LatticeError> {
        if !self.is_cycle(z) {
            return Err(LatticeError::NotACycle);
        }
        let c = self.cycles.coords_in_basis(z).ok_or(LatticeError::NotACycle)?;
        Ok(self.pres.canon(&c))
    }

    /// A cycle representing the class with canonical coordinates `h`.
    pub fn rep_of(&self, h: &[Int]) -> Vec<Int> {
        let c = self.pres.from_canon(h);
        let z = self.cycles.basis().mul_vec(&c);
        self.boundaries.reduce(&z)
    }
}

/// Homology of `A --d_in--> B --d_out--> C` at `B`.
pub fn homology_at(d_in: &AbMap, d_out: &AbMap) -> Result<Homology, LatticeError> {
    let b = &d_in.codomain;
    assert_eq!(b.ngens(), d_out.domain.ngens(), "maps are not composable");
    let comp = d_out.matrix.mul(&d_in.matrix);
    let c = &d_out.codomain;
    for j in 0..comp.cols() {
        if !c.is_zero(&comp.col(j)) {
            return Err(LatticeError::NotAComplex);
        }
    }
    let n = b.ngens();
    let ker = crate::lattice::echelon::kernel(&d_out.matrix.hcat(c.relations()));
    let cycles = column_hnf(&ker.submatrix(0..n, 0..ker.cols()), false);
    let bnd_gens = d_in.matrix.hcat(b.relations());
    let mut rel = IntMatrix::zeros(cycles.rank(), bnd_gens.cols());
    for j in 0..bnd_gens.cols() {
        let co = cycles.coords_in_basis(&bnd_gens.col(j)).ok_or(LatticeError::NotAComplex)?;
        rel.set_col(j, &co);
    }
    let pres = FgAb::new(cycles.rank(), rel);
    let group = FgAb::canonical(pres.factors(), pres.free_rank());
    let boundaries = column_hnf(&bnd_gens, false);
    Ok(Homology { group, cycles, pres, boundaries, d_out: d_out.clone() })
}
