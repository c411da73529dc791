use crate::int::Int;
use crate::lattice::{FgAb, IntMatrix, LatticeSolver};

/// The subgroup of a presented group spanned by some columns.
#[derive(Clone, Debug)]
pub struct Span {
    pub ambient: FgAb,
    pub gens: IntMatrix,
    solver: Option<LatticeSolver>,
}

impl Span {
    pub fn new(ambient: &FgAb, gens: IntMatrix) -> Span {
        assert_eq!(gens.rows(), ambient.ngens());
        let full = gens.hcat(ambient.relations());
        let solver = (full.cols() > 0).then(|| LatticeSolver::new(&full));
        Span { ambient: ambient.clone(), gens, solver }
    }

    pub fn from_vecs(ambient: &FgAb, gens: &[Vec<Int>]) -> Span {
        Span::new(ambient, IntMatrix::from_cols(ambient.ngens(), gens))
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        match &self.solver {
            Some(s) => s.solve(x).is_some(),
            None => x.iter().all(Int::is_zero),
        }
    }

    pub fn contains_span(&self, other: &Span) -> bool {
        other.gens.columns().iter().all(|c| self.contains(c))
    }

    pub fn same_as(&self, other: &Span) -> bool {
        self.contains_span(other) && other.contains_span(self)
    }

    /// Order of the subgroup, `None` if infinite.
    pub fn order(&self) -> Option<usize> {
        self.group().order().and_then(|o| o.to_usize())
    }

    pub fn group(&self) -> FgAb {
        self.ambient.subgroup(&self.gens).0
    }

    /// `self + other`.
    pub fn sum(&self, other: &Span) -> Span {
        Span::new(&self.ambient, self.gens.hcat(&other.gens))
    }
}
