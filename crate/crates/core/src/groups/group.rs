use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::int::Int;
use crate::lattice::{FgAb, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {axiom} fails at {witness:?}")]
    NotAGroup { axiom: String, witness: Vec<usize> },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("not a homomorphism: f({0}*{1}) != f({0})*f({1})")]
    NotAHomomorphism(usize, usize),
    #[error("not a normalized 2-cocycle: identity fails at {0:?}")]
    NotACocycle(Vec<usize>),
    #[error("invalid data: {0}")]
    Invalid(String),
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    n: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
    name: String,
}

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup(Arc<Inner>);

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.0.name, self.0.n)
    }
}

impl FiniteGroup {
    /// Validates a multiplication table: `table[a][b] = a * b`.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        let err = |axiom: &str, witness: Vec<usize>| GroupError::NotAGroup { axiom: axiom.into(), witness };
        if n == 0 {
            return Err(err("nonempty", vec![]));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(err("square table", vec![a]));
            }
            if let Some(&b) = row.iter().find(|&&x| x >= n) {
                return Err(err("closure", vec![a, b]));
            }
        }
        for a in 0..n {
            let mut seen = vec![usize::MAX; n];
            for b in 0..n {
                let p = table[a][b];
                if seen[p] != usize::MAX {
                    return Err(err("cancellation", vec![a, seen[p], b]));
                }
                seen[p] = b;
            }
            let mut seen = vec![usize::MAX; n];
            for b in 0..n {
                let p = table[b][a];
                if seen[p] != usize::MAX {
                    return Err(err("cancellation", vec![seen[p], b, a]));
                }
                seen[p] = b;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| err("identity", vec![]))?;
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    let ab = table[a][b];
                    for c in 0..n {
                        if table[ab][c] != table[a][table[b][c]] {
                            return Err(err("associativity", vec![a, b, c]));
                        }
                    }
                }
            }
        }
        let inverse: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| table[a][b] == identity).unwrap()).collect();
        for a in 0..n {
            if table[inverse[a]][a] != identity {
                return Err(err("inverse", vec![a]));
            }
        }
        Ok(FiniteGroup(Arc::new(Inner {
            n,
            table: table.into_iter().flatten().collect(),
            identity,
            inverse,
            labels: (0..n).map(|i| format!("g{i}")).collect(),
            name: format!("G{n}"),
        })))
    }

    pub fn with_name(self, name: &str) -> FiniteGroup {
        let mut inner = Arc::try_unwrap(self.0).unwrap_or_else(|a| clone_inner(&a));
        inner.name = name.into();
        FiniteGroup(Arc::new(inner))
    }

    pub fn with_labels(self, labels: Vec<String>) -> FiniteGroup {
        assert_eq!(labels.len(), self.order());
        let mut inner = Arc::try_unwrap(self.0).unwrap_or_else(|a| clone_inner(&a));
        inner.labels = labels;
        FiniteGroup(Arc::new(inner))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn order(&self) -> usize {
        self.0.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.0.n
    }

    pub fn identity(&self) -> usize {
        self.0.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.0.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.0.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.0.labels[a]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.0.table.chunks(self.0.n).map(|r| r.to_vec()).collect()
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity(), |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `a b a⁻¹`
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// A small generating set, chosen greedily by element index.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = Subgroup::trivial(self);
        for g in self.elements() {
            if !span.contains(g) {
                gens.push(g);
                span = Subgroup::generated(self, &gens);
                if span.order() == self.order() {
                    break;
                }
            }
        }
        gens
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_table(vec![vec![0]]).unwrap().with_name("1").with_labels(vec!["1".into()])
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|k| if k == 0 { "1".into() } else if k == 1 { "s".into() } else { format!("s^{k}") }).collect();
        FiniteGroup::from_table(table).unwrap().with_name(&format!("C{n}")).with_labels(labels)
    }

    /// `G × H`, element `(g, h)` at index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (m, n) = (g.order(), h.order());
        let table = (0..m * n)
            .map(|a| (0..m * n).map(|b| g.mul(a / n, b / n) * n + h.mul(a % n, b % n)).collect())
            .collect();
        let labels = (0..m * n).map(|a| format!("({},{})", g.label(a / n), h.label(a % n))).collect();
        FiniteGroup::from_table(table).unwrap().with_name(&format!("{}x{}", g.name(), h.name())).with_labels(labels)
    }

    /// Dihedral group of order `2n`: `r^k s^e` at index `2k + e`.
    pub fn dihedral(n: usize) -> FiniteGroup {
        let idx = |k: usize, e: usize| 2 * (k % n) + e;
        let table = (0..2 * n)
            .map(|a| {
                (0..2 * n)
                    .map(|b| {
                        let (k1, e1, k2, e2) = (a / 2, a % 2, b / 2, b % 2);
                        // r^k1 s^e1 r^k2 s^e2 = r^(k1 ± k2) s^(e1+e2)
                        let k = if e1 == 0 { k1 + k2 } else { k1 + n - k2 };
                        idx(k, (e1 + e2) % 2)
                    })
                    .collect()
            })
            .collect();
        let labels = (0..2 * n)
            .map(|a| {
                let (k, e) = (a / 2, a % 2);
                match (k, e) {
                    (0, 0) => "1".to_string(),
                    (0, 1) => "s".to_string(),
                    (k, 0) => format!("r^{k}"),
                    (k, _) => format!("r^{k}s"),
                }
            })
            .collect();
        FiniteGroup::from_table(table).unwrap().with_name(&format!("D{n}")).with_labels(labels)
    }

    /// Quaternion group: `±1, ±i, ±j, ±k`.
    pub fn quaternion() -> FiniteGroup {
        // unit u in {1,i,j,k} encoded 0..4, sign bit; index = 2u + sign
        let mul_units = |a: usize, b: usize| -> (usize, usize) {
            const T: [[(usize, usize); 4]; 4] = [
                [(0, 0), (1, 0), (2, 0), (3, 0)],
                [(1, 0), (0, 1), (3, 0), (2, 1)],
                [(2, 0), (3, 1), (0, 1), (1, 0)],
                [(3, 0), (2, 0), (1, 1), (0, 1)],
            ];
            T[a][b]
        };
        let table = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (u, s) = mul_units(a / 2, b / 2);
                        2 * u + (s + a % 2 + b % 2) % 2
                    })
                    .collect()
            })
            .collect();
        let names = ["1", "i", "j", "k"];
        let labels = (0..8).map(|a| format!("{}{}", if a % 2 == 1 { "-" } else { "" }, names[a / 2])).collect();
        FiniteGroup::from_table(table).unwrap().with_name("Q8").with_labels(labels)
    }

    /// Symmetric group on `n` letters, elements in lexicographic order of permutations.
    pub fn symmetric(n: usize) -> FiniteGroup {
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            let mut next = vec![];
            for p in &perms {
                for x in 0..n {
                    if !p.contains(&x) {
                        let mut q = p.clone();
                        q.push(x);
                        next.push(q);
                    }
                }
            }
            perms = next;
        }
        FiniteGroup::from_permutations(&perms).with_name(&format!("S{n}"))
    }

    /// Group of the given permutations (closed under composition, `(p q)(x) = p(q(x))`).
    pub fn from_permutations(perms: &[Vec<usize>]) -> FiniteGroup {
        let find = |q: &Vec<usize>| perms.iter().position(|p| p == q).expect("permutations not closed");
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| find(&q.iter().map(|&x| p[x]).collect())).collect())
            .collect();
        let labels = perms.iter().map(|p| p.iter().map(|x| (x + 1).to_string()).collect::<String>()).collect();
        FiniteGroup::from_table(table).unwrap().with_labels(labels)
    }

    /// The named groups used across the suite.
    pub fn named(name: &str) -> Option<FiniteGroup> {
        let g = match name {
            "1" | "C1" | "trivial" => FiniteGroup::trivial(),
            "V4" | "C2xC2" => {
                let c2 = FiniteGroup::cyclic(2);
                FiniteGroup::direct_product(&c2, &c2).with_name("V4")
            }
            "S3" => FiniteGroup::symmetric(3),
            "Q8" => FiniteGroup::quaternion(),
            _ => {
                if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse().ok()).filter(|&n: &usize| n >= 1) {
                    FiniteGroup::cyclic(n)
                } else if let Some(n) = name.strip_prefix('D').and_then(|s| s.parse().ok()).filter(|&n: &usize| n >= 2) {
                    FiniteGroup::dihedral(n)
                } else {
                    return None;
                }
            }
        };
        Some(g)
    }

    /// All subgroups generated by at most two elements, sorted by (order, elements).
    pub fn small_subgroups(&self) -> Vec<Subgroup> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for a in self.elements() {
            for b in a..self.order() {
                seen.insert(Subgroup::generated(self, &[a, b]).elements().to_vec());
            }
        }
        let mut subs: Vec<Subgroup> =
            seen.into_iter().map(|e| Subgroup { group: self.clone(), elements: e }).collect();
        subs.sort_by(|x, y| (x.order(), x.elements()).cmp(&(y.order(), y.elements())));
        subs
    }
}

fn clone_inner(a: &Inner) -> Inner {
    Inner {
        n: a.n,
        table: a.table.clone(),
        identity: a.identity,
        inverse: a.inverse.clone(),
        labels: a.labels.clone(),
        name: a.name.clone(),
    }
}

/// A subgroup, as a sorted set of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    group: FiniteGroup,
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn new(group: &FiniteGroup, elements: &[usize]) -> Result<Subgroup, GroupError> {
        let mut e = elements.to_vec();
        e.sort_unstable();
        e.dedup();
        if let Some(&x) = e.iter().find(|&&x| x >= group.order()) {
            return Err(GroupError::NotASubgroup(format!("element {x} out of range")));
        }
        if !e.contains(&group.identity()) {
            return Err(GroupError::NotASubgroup("missing identity".into()));
        }
        for &a in &e {
            if e.binary_search(&group.inv(a)).is_err() {
                return Err(GroupError::NotASubgroup(format!("not closed under inverse at {a}")));
            }
            for &b in &e {
                if e.binary_search(&group.mul(a, b)).is_err() {
                    return Err(GroupError::NotASubgroup(format!("not closed under product at ({a}, {b})")));
                }
            }
        }
        Ok(Subgroup { group: group.clone(), elements: e })
    }

    pub fn whole(group: &FiniteGroup) -> Subgroup {
        Subgroup { group: group.clone(), elements: group.elements().collect() }
    }

    pub fn trivial(group: &FiniteGroup) -> Subgroup {
        Subgroup { group: group.clone(), elements: vec![group.identity()] }
    }

    /// Subgroup generated by `gens`.
    pub fn generated(group: &FiniteGroup, gens: &[usize]) -> Subgroup {
        let mut inside = vec![false; group.order()];
        inside[group.identity()] = true;
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = group.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let elements = (0..group.order()).filter(|&i| inside[i]).collect();
        Subgroup { group: group.clone(), elements }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn is_normal(&self) -> bool {
        self.group.elements().all(|g| self.elements.iter().all(|&h| self.contains(self.group.conj(g, h))))
    }

    /// The subgroup as a group in its own right, with the embedding into the parent.
    ///
    /// Element `i` of the returned group is `self.elements()[i]`.
    pub fn as_group(&self) -> (FiniteGroup, GroupHom) {
        let pos = |x: usize| self.elements.binary_search(&x).unwrap();
        let table = self.elements.iter().map(|&a| self.elements.iter().map(|&b| pos(self.group.mul(a, b))).collect()).collect();
        let labels = self.elements.iter().map(|&a| self.group.label(a).to_string()).collect();
        let h = FiniteGroup::from_table(table)
            .expect("subgroup table")
            .with_labels(labels)
            .with_name(&format!("{}<{}", self.order(), self.group.name()));
        let emb = GroupHom { domain: h.clone(), codomain: self.group.clone(), images: self.elements.clone() };
        (h, emb)
    }

    /// Position of an element inside `elements()`.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }
}

/// A homomorphism of finite groups, as an image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub domain: FiniteGroup,
    pub codomain: FiniteGroup,
    pub images: Vec<usize>,
}

impl GroupHom {
    pub fn new(domain: &FiniteGroup, codomain: &FiniteGroup, images: Vec<usize>) -> Result<GroupHom, GroupError> {
        if images.len() != domain.order() || images.iter().any(|&x| x >= codomain.order()) {
            return Err(GroupError::Invalid("image table has wrong shape".into()));
        }
        if let Some((a, b)) = first_non_multiplicative(domain, codomain, &images) {
            return Err(GroupError::NotAHomomorphism(a, b));
        }
        Ok(GroupHom { domain: domain.clone(), codomain: codomain.clone(), images })
    }

    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    pub fn then(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn kernel(&self) -> Subgroup {
        let e = self.codomain.identity();
        let els: Vec<usize> = self.domain.elements().filter(|&g| self.images[g] == e).collect();
        Subgroup { group: self.domain.clone(), elements: els }
    }

    pub fn image(&self) -> Subgroup {
        let mut els = self.images.clone();
        els.sort_unstable();
        els.dedup();
        Subgroup { group: self.codomain.clone(), elements: els }
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.codomain.order()
    }
}

/// First pair `(a, b)` with `f(ab) != f(a) f(b)`.
pub fn first_non_multiplicative(domain: &FiniteGroup, codomain: &FiniteGroup, images: &[usize]) -> Option<(usize, usize)> {
    for a in domain.elements() {
        for b in domain.elements() {
            if images[domain.mul(a, b)] != codomain.mul(images[a], images[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Left coset representatives of `H` in `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cosets {
    /// One representative per left coset `σH`; the identity represents `H`.
    pub reps: Vec<usize>,
    /// `rho[σ]` is the representative of `σH`.
    pub rho: Vec<usize>,
}

impl Cosets {
    pub fn rep_index(&self, g: usize) -> usize {
        self.reps.iter().position(|&r| r == self.rho[g]).unwrap()
    }
}

/// Coset representatives: the identity for `H`, otherwise the smallest index in the coset.
pub fn cosets_and_reps(g: &FiniteGroup, h: &Subgroup) -> Cosets {
    let n = g.order();
    let mut rho = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut order: Vec<usize> = vec![g.identity()];
    order.extend(g.elements().filter(|&x| x != g.identity()));
    for s in order {
        if rho[s] != usize::MAX {
            continue;
        }
        reps.push(s);
        for &x in h.elements() {
            rho[g.mul(s, x)] = s;
        }
    }
    Cosets { reps, rho }
}

/// Abelianization `G^ab` in canonical presentation.
#[derive(Clone, Debug)]
pub struct Abelianization {
    pub group: FgAb,
    /// Canonical coordinates of the image of each element.
    pub images: Vec<Vec<Int>>,
    pub commutator: Subgroup,
}

/// `G^ab`, presented on generators `e_g` with relations `e_g + e_h - e_{gh}`.
pub fn abelianization(g: &FiniteGroup) -> Abelianization {
    let n = g.order();
    let gens = g.generators();
    let mut rel = IntMatrix::zeros(n, n * gens.len() + 1);
    rel[(g.identity(), 0)] = Int::ONE;
    let mut col = 1;
    for a in g.elements() {
        for &s in &gens {
            rel[(a, col)] += Int::ONE;
            rel[(s, col)] += Int::ONE;
            rel[(g.mul(a, s), col)] -= Int::ONE;
            col += 1;
        }
    }
    let pres = FgAb::new(n, rel);
    let images = g.elements().map(|a| pres.canon(&pres.gen(a))).collect();
    let group = FgAb::canonical(pres.factors(), pres.free_rank());
    let comms: Vec<usize> = g.elements().flat_map(|a| g.elements().map(move |b| (a, b))).map(|(a, b)| g.commutator(a, b)).collect();
    Abelianization { group, images, commutator: Subgroup::generated(g, &comms) }
}

/// Smallest normal subgroup containing `gens`.
pub fn normal_closure(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    let mut current = Subgroup::generated(g, gens);
    loop {
        let conjugates: Vec<usize> =
            g.elements().flat_map(|x| current.elements().iter().map(move |&h| (x, h))).map(|(x, h)| g.conj(x, h)).collect();
        let next = Subgroup::generated(g, &conjugates);
        if next.order() == current.order() {
            return current;
        }
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(n: &str) -> FiniteGroup {
        FiniteGroup::named(n).unwrap()
    }

    #[test]
    fn named_groups_are_valid() {
        for (name, order, abelian) in
            [("C2", 2, true), ("C3", 3, true), ("C4", 4, true), ("V4", 4, true), ("S3", 6, false), ("D4", 8, false), ("Q8", 8, false)]
        {
            let g = named(name);
            assert_eq!(g.order(), order);
            assert_eq!(g.is_abelian(), abelian, "{name}");
            FiniteGroup::from_table(g.table()).unwrap();
        }
        assert_eq!(named("Q8").elements().filter(|&a| named("Q8").element_order(a) == 4).count(), 6);
        assert_eq!(named("D4").elements().filter(|&a| named("D4").element_order(a) == 2).count(), 5);
    }

    #[test]
    fn broken_tables_are_rejected() {
        let e = FiniteGroup::from_table(vec![vec![0, 1], vec![0, 1]]).unwrap_err();
        assert!(matches!(e, GroupError::NotAGroup { ref axiom, .. } if axiom == "cancellation"));
        assert!(FiniteGroup::from_table(vec![vec![0]]).is_ok());
        // a Latin square that is not associative
        let t = vec![vec![0, 1, 2, 3, 4], vec![1, 0, 3, 4, 2], vec![2, 4, 0, 1, 3], vec![3, 2, 4, 0, 1], vec![4, 3, 1, 2, 0]];
        let e = FiniteGroup::from_table(t).unwrap_err();
        assert!(matches!(e, GroupError::NotAGroup { ref axiom, .. } if axiom == "associativity"));
    }

    #[test]
    fn cosets_partition() {
        for name in ["S3", "D4", "Q8", "V4"] {
            let g = named(name);
            for h in g.small_subgroups() {
                let c = cosets_and_reps(&g, &h);
                assert_eq!(c.reps.len(), h.index());
                assert_eq!(c.reps[0], g.identity());
                for s in g.elements() {
                    assert!(h.contains(g.mul(g.inv(c.rho[s]), s)));
                    assert!(c.reps.contains(&c.rho[s]));
                }
            }
        }
        let g = named("S3");
        let t = Subgroup::generated(&g, &[1]);
        assert_eq!(t.order(), 2);
        assert_eq!(cosets_and_reps(&g, &t).reps.len(), 3);
    }

    #[test]
    fn abelianizations() {
        let ab = |n: &str| abelianization(&named(n)).group.invariants();
        assert_eq!(ab("C4"), vec![Int::from(4)]);
        assert_eq!(ab("S3"), vec![Int::from(2)]);
        assert_eq!(ab("Q8"), vec![Int::from(2), Int::from(2)]);
        assert_eq!(ab("D4"), vec![Int::from(2), Int::from(2)]);
        assert_eq!(abelianization(&named("Q8")).commutator.order(), 2);
        // the projection is a homomorphism with kernel the commutator subgroup
        for n in ["S3", "D4", "Q8", "V4", "C3"] {
            let g = named(n);
            let a = abelianization(&g);
            for x in g.elements() {
                for y in g.elements() {
                    let s: Vec<Int> = a.images[x].iter().zip(&a.images[y]).map(|(p, q)| p + q).collect();
                    assert_eq!(a.group.canon(&s), a.images[g.mul(x, y)]);
                }
                let zero = a.images[x].iter().all(Int::is_zero);
                assert_eq!(zero, a.commutator.contains(x));
            }
        }
    }

    #[test]
    fn normal_closures() {
        let g = named("S3");
        assert_eq!(normal_closure(&g, &[]).order(), 1);
        let t = (0..6).find(|&x| x != g.identity() && g.element_order(x) == 2).unwrap();
        assert_eq!(normal_closure(&g, &[t]).order(), 6);
        let c4 = named("C4");
        assert_eq!(normal_closure(&c4, &[2]).order(), 2);
    }
}
