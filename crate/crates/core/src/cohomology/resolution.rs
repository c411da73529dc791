use crate::groups::FiniteGroup;
use crate::int::Int;
use crate::lattice::{invariant_factors, IntMatrix};

use super::CohomologyError;
use crate::gmodule::{regular, GModule};

/// Largest free rank of any `X_n` a resolution may hold.
pub const MAX_BASIS: usize = 1 << 20;

/// Matrix over `Z[G]` of a map of free right modules, stored by column.
///
/// Column `b` lists `(t, g, c)`: the image of basis element `b` contains `t·(c g)`.
#[derive(Clone, Debug)]
pub struct ZgMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, usize, i64)>>,
}

/// Index of a tuple in `G^k`, first entry most significant.
pub fn tuple_index(n: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &x| acc * n + x)
}

pub fn tuple_of(n: usize, k: usize, mut idx: usize) -> Vec<usize> {
    let mut t = vec![0; k];
    for j in (0..k).rev() {
        t[j] = idx % n;
        idx /= n;
    }
    t
}

/// A complete resolution `X_•` of `Z` over `Z[G]`, truncated to degrees `[lo, hi]`.
///
/// For `n ≥ 0`, `X_n` is the bar resolution on `G^n`; `X_0 → X_{-1}` is the norm;
/// for `n = -k-1 < 0`, `X_n` has basis `G^k` and `X_n ⊗_G M` is the module of
/// inhomogeneous `k`-cochains. Tate cohomology is `H^i(G, M) = H(X_{-i-1} ⊗_G M)`.
#[derive(Clone, Debug)]
pub struct CompleteResolution {
    group: FiniteGroup,
    lo: i32,
    hi: i32,
    diffs: Vec<ZgMatrix>,
}

impl CompleteResolution {
    pub const DEFAULT_WINDOW: (i32, i32) = (-4, 3);

    pub fn new(group: &FiniteGroup, lo: i32, hi: i32) -> Result<CompleteResolution, CohomologyError> {
        if lo < -5 || hi > 5 || lo >= hi {
            return Err(CohomologyError::WindowTooLarge { lo, hi });
        }
        let n = group.order();
        let k_max = hi.max(-lo - 1).max(0) as u32;
        if n.checked_pow(k_max).is_none_or(|s| s > MAX_BASIS) {
            return Err(CohomologyError::WindowTooLarge { lo, hi });
        }
        let diffs = (lo + 1..=hi).map(|d| build_differential(group, d)).collect();
        Ok(CompleteResolution { group: group.clone(), lo, hi, diffs })
    }

    pub fn default_for(group: &FiniteGroup) -> Result<CompleteResolution, CohomologyError> {
        let (lo, hi) = Self::DEFAULT_WINDOW;
        CompleteResolution::new(group, lo, hi)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn window(&self) -> (i32, i32) {
        (self.lo, self.hi)
    }

    /// Range of Tate degrees computable from this window.
    pub fn degree_range(&self) -> (i32, i32) {
        (-self.hi, -self.lo - 2)
    }

    pub fn check_degree(&self, i: i32) -> Result<(), CohomologyError> {
        let (a, b) = self.degree_range();
        if i < a || i > b {
            Err(CohomologyError::DegreeOutOfWindow(i))
        } else {
            Ok(())
        }
    }

    /// Z[G]-rank of `X_n`.
    pub fn rank(&self, n: i32) -> usize {
        self.group.order().pow(tuple_len(n) as u32)
    }

    /// `∂_n : X_n → X_{n-1}`, for `lo < n ≤ hi`.
    pub fn differential(&self, n: i32) -> &ZgMatrix {
        assert!(n > self.lo && n <= self.hi, "differential {n} outside window");
        &self.diffs[(n - self.lo - 1) as usize]
    }

    /// `∂_n ⊗ M` as an integer matrix.
    pub fn tensor_differential(&self, n: i32, m: &GModule) -> IntMatrix {
        let d = self.differential(n);
        let k = m.ngens();
        let mut out = IntMatrix::zeros(d.rows * k, d.cols.len() * k);
        for (b, col) in d.cols.iter().enumerate() {
            for &(t, g, c) in col {
                let a = m.action(g);
                let c = Int::from(c);
                for r in 0..k {
                    for s in 0..k {
                        let v = &a[(r, s)];
                        if !v.is_zero() {
                            out[(t * k + r, b * k + s)] += &c * v;
                        }
                    }
                }
            }
        }
        out
    }

    /// Number of blocks of the cochain group in Tate degree `i`.
    pub fn cochain_rank(&self, i: i32) -> usize {
        self.rank(-i - 1)
    }

    /// Cochain differential `T^i(M) → T^{i+1}(M)`.
    pub fn cochain_differential(&self, i: i32, m: &GModule) -> IntMatrix {
        self.tensor_differential(-i - 1, m)
    }

    /// Checks `∂_{n-1} ∂_n = 0` over `Z[G]` (via the regular module).
    pub fn check_d_squared(&self) -> Result<(), i32> {
        let reg = regular(&self.group);
        for n in self.lo + 2..=self.hi {
            let p = self.tensor_differential(n - 1, &reg).mul(&self.tensor_differential(n, &reg));
            if !p.is_zero() {
                return Err(n);
            }
        }
        Ok(())
    }

    /// Checks exactness of `X_•` at every interior degree; returns the first failing degree.
    pub fn check_acyclic(&self) -> Result<(), i32> {
        let reg = regular(&self.group);
        let mut ranks = Vec::new();
        let mut saturated = Vec::new();
        for n in self.lo + 1..=self.hi {
            let f = invariant_factors(&self.tensor_differential(n, &reg));
            let r = f.iter().filter(|d| !d.is_zero()).count();
            ranks.push(r);
            saturated.push(f.iter().all(|d| d.is_zero() || d.is_one()));
        }
        for n in self.lo + 1..self.hi {
            let idx = (n - self.lo - 1) as usize;
            let size = self.rank(n) * self.group.order();
            if ranks[idx] + ranks[idx + 1] != size || !saturated[idx + 1] {
                return Err(n);
            }
        }
        Ok(())
    }
}

fn tuple_len(n: i32) -> usize {
    if n >= 0 {
        n as usize
    } else {
        (-n - 1) as usize
    }
}

fn build_differential(g: &FiniteGroup, d: i32) -> ZgMatrix {
    let n = g.order();
    let e = g.identity();
    if d >= 1 {
        // [σ1..σd] ↦ [σ1..σ_{d-1}]σd + Σ (-1)^{d-i} [..σiσ_{i+1}..] + (-1)^d [σ2..σd]
        let k = d as usize;
        let rows = n.pow(k as u32 - 1);
        let cols = (0..n.pow(k as u32))
            .map(|b| {
                let t = tuple_of(n, k, b);
                let mut col = vec![(tuple_index(n, &t[..k - 1]), t[k - 1], 1)];
                for i in 0..k - 1 {
                    let mut s = t[..i].to_vec();
                    s.push(g.mul(t[i], t[i + 1]));
                    s.extend_from_slice(&t[i + 2..]);
                    let sign = if (k - 1 - i) % 2 == 0 { 1 } else { -1 };
                    col.push((tuple_index(n, &s), e, sign));
                }
                col.push((tuple_index(n, &t[1..]), e, if k % 2 == 0 { 1 } else { -1 }));
                col
            })
            .collect();
        ZgMatrix { rows, cols }
    } else if d == 0 {
        ZgMatrix { rows: 1, cols: vec![g.elements().map(|x| (0, x, 1)).collect()] }
    } else {
        // X_d ⊗ M = k-cochains, X_{d-1} ⊗ M = (k+1)-cochains; standard coboundary
        let k = (-d - 1) as usize;
        let rows = n.pow(k as u32 + 1);
        let mut cols = vec![Vec::new(); n.pow(k as u32)];
        for ti in 0..rows {
            let t = tuple_of(n, k + 1, ti);
            cols[tuple_index(n, &t[1..])].push((ti, t[0], 1));
            for i in 0..k {
                let mut s = t[..i].to_vec();
                s.push(g.mul(t[i], t[i + 1]));
                s.extend_from_slice(&t[i + 2..]);
                cols[tuple_index(n, &s)].push((ti, e, if i % 2 == 0 { -1 } else { 1 }));
            }
            cols[tuple_index(n, &t[..k])].push((ti, e, if k % 2 == 0 { -1 } else { 1 }));
        }
        ZgMatrix { rows, cols }
    }
}
