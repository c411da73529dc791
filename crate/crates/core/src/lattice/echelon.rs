//! Column Hermite normal form, integer kernels and lattice membership.

use crate::int::Int;
use crate::lattice::matrix::IntMatrix;

/// `A · V = [H | 0]` with `H` in column Hermite normal form.
///
/// Column `k` of `H` has its first nonzero entry (the pivot, positive) in row
/// `pivots[k]`, pivot rows strictly increase, and entries left of a pivot are
/// reduced into `[0, pivot)`.
#[derive(Clone, Debug)]
pub struct ColumnHnf {
    pub h: IntMatrix,
    pub pivots: Vec<usize>,
    pub v: Option<IntMatrix>,
}

impl ColumnHnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the column lattice of `A` (the nonzero columns of `H`).
    pub fn basis(&self) -> IntMatrix {
        self.h.submatrix(0..self.h.rows(), 0..self.rank())
    }

    /// Basis of the integer kernel of `A` (needs the transform).
    pub fn kernel(&self) -> IntMatrix {
        let v = self.v.as_ref().expect("transform not computed");
        v.submatrix(0..v.rows(), self.rank()..v.cols())
    }

    /// Coordinates `c` with `H c = b`, if `b` lies in the column lattice.
    pub fn coords_in_basis(&self, b: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(b.len(), self.h.rows());
        let mut res = b.to_vec();
        let mut c = Vec::with_capacity(self.rank());
        let mut row = 0;
        for (k, &p) in self.pivots.iter().enumerate() {
            while row < p {
                if !res[row].is_zero() {
                    return None;
                }
                row += 1;
            }
            let piv = &self.h[(p, k)];
            if !piv.divides(&res[p]) {
                return None;
            }
            let q = res[p].div_exact(piv);
            if !q.is_zero() {
                for i in p..res.len() {
                    let hk = &self.h[(i, k)];
                    if !hk.is_zero() {
                        res[i] -= &q * hk;
                    }
                }
            }
            c.push(q);
            row = p + 1;
        }
        if res[row.min(res.len())..].iter().all(Int::is_zero) {
            Some(c)
        } else {
            None
        }
    }

    /// Some `x` with `A x = b`, if one exists (needs the transform).
    pub fn solve(&self, b: &[Int]) -> Option<Vec<Int>> {
        let c = self.coords_in_basis(b)?;
        let v = self.v.as_ref().expect("transform not computed");
        let mut x = vec![Int::ZERO; v.rows()];
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (i, xi) in x.iter_mut().enumerate() {
                let e = &v[(i, k)];
                if !e.is_zero() {
                    *xi += ck * e;
                }
            }
        }
        Some(x)
    }

    /// Canonical representative of `b` modulo the column lattice.
    pub fn reduce(&self, b: &[Int]) -> Vec<Int> {
        let mut res = b.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            let q = res[p].div_floor(&self.h[(p, k)]);
            if q.is_zero() {
                continue;
            }
            for i in p..res.len() {
                let hk = &self.h[(i, k)];
                if !hk.is_zero() {
                    res[i] -= &q * hk;
                }
            }
        }
        res
    }
}

fn sub_multiple(dst: &mut [Int], src: &[Int], q: &Int, from: usize) {
    for (d, x) in dst[from..].iter_mut().zip(&src[from..]) {
        if !x.is_zero() {
            *d -= q * x;
        }
    }
}

/// Column Hermite normal form of `a`, with the unimodular transform when requested.
pub fn column_hnf(a: &IntMatrix, with_transform: bool) -> ColumnHnf {
    let (m, n) = (a.rows(), a.cols());
    let mut cols = a.columns();
    let mut vcols: Option<Vec<Vec<Int>>> =
        with_transform.then(|| (0..n).map(|j| crate::lattice::matrix::unit(n, j)).collect());
    let mut pivots = Vec::new();
    let mut k = 0;
    for i in 0..m {
        if k == n {
            break;
        }
        loop {
            let mut best: Option<(usize, Int)> = None;
            for (j, c) in cols.iter().enumerate().skip(k) {
                let v = &c[i];
                if !v.is_zero() {
                    let av = v.abs();
                    if best.as_ref().is_none_or(|(_, b)| av < *b) {
                        best = Some((j, av));
                    }
                }
            }
            let Some((b, _)) = best else { break };
            cols.swap(k, b);
            if let Some(v) = vcols.as_mut() {
                v.swap(k, b);
            }
            let (head, tail) = cols.split_at_mut(k + 1);
            let pc = &head[k];
            let piv = pc[i].clone();
            let mut rest = false;
            for (off, c) in tail.iter_mut().enumerate() {
                if c[i].is_zero() {
                    continue;
                }
                let q = c[i].div_round(&piv);
                sub_multiple(c, pc, &q, i);
                if let Some(v) = vcols.as_mut() {
                    let (vh, vt) = v.split_at_mut(k + 1);
                    sub_multiple(&mut vt[off], &vh[k], &q, 0);
                }
                rest |= !c[i].is_zero();
            }
            if !rest {
                break;
            }
        }
        if k >= n || cols[k][i].is_zero() {
            continue;
        }
        if cols[k][i].is_negative() {
            for x in cols[k][i..].iter_mut() {
                *x = -&*x;
            }
            if let Some(v) = vcols.as_mut() {
                for x in v[k].iter_mut() {
                    *x = -&*x;
                }
            }
        }
        let (head, tail) = cols.split_at_mut(k);
        let pc = &tail[0];
        let piv = pc[i].clone();
        for (j, c) in head.iter_mut().enumerate() {
            let q = c[i].div_floor(&piv);
            if !q.is_zero() {
                sub_multiple(c, pc, &q, i);
                if let Some(v) = vcols.as_mut() {
                    let (vh, vt) = v.split_at_mut(k);
                    sub_multiple(&mut vh[j], &vt[0], &q, 0);
                }
            }
        }
        pivots.push(i);
        k += 1;
    }
    let h = IntMatrix::from_cols(m, &cols);
    let v = vcols.map(|v| IntMatrix::from_cols(n, &v));
    ColumnHnf { h, pivots, v }
}

/// Integer kernel basis of `a` (columns).
pub fn kernel(a: &IntMatrix) -> IntMatrix {
    column_hnf(a, true).kernel()
}

/// Basis (columns, Hermite form) of the lattice spanned by the columns of `a`.
pub fn lattice_basis(a: &IntMatrix) -> IntMatrix {
    column_hnf(a, false).basis()
}

/// Solver for `A x = b` over the integers.
#[derive(Clone, Debug)]
pub struct LatticeSolver {
    hnf: ColumnHnf,
}

impl LatticeSolver {
    pub fn new(a: &IntMatrix) -> LatticeSolver {
        LatticeSolver { hnf: column_hnf(a, true) }
    }

    pub fn solve(&self, b: &[Int]) -> Option<Vec<Int>> {
        self.hnf.solve(b)
    }

    pub fn contains(&self, b: &[Int]) -> bool {
        self.hnf.coords_in_basis(b).is_some()
    }

    pub fn hnf(&self) -> &ColumnHnf {
        &self.hnf
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::matrix::ivec;
    use proptest::prelude::*;

    fn mat(rows: usize, cols: usize, vals: &[i64]) -> IntMatrix {
        let rs: Vec<Vec<i64>> = vals.chunks(cols).map(|c| c.to_vec()).collect();
        assert_eq!(rs.len(), rows);
        IntMatrix::from_i64_rows(&rs)
    }

    #[test]
    fn kernel_of_small_matrix() {
        let a = mat(2, 3, &[1, 2, 3, 4, 5, 6]);
        let k = kernel(&a);
        assert_eq!(k.cols(), 1);
        let kv = k.col(0);
        assert!(a.mul_vec(&kv).iter().all(Int::is_zero));
        let g = kv.iter().fold(Int::ZERO, |g, x| g.gcd(x));
        assert!(g.is_one());
    }

    #[test]
    fn solve_respects_lattice() {
        let a = mat(2, 2, &[2, 0, 0, 3]);
        let s = LatticeSolver::new(&a);
        assert!(s.solve(&ivec(&[4, 9])).is_some());
        assert!(s.solve(&ivec(&[1, 0])).is_none());
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..7, r * c).prop_map(move |v| mat(r, c, &v))
        })
    }

    proptest! {
        #[test]
        fn hnf_transform_is_consistent(a in small_matrix()) {
            let h = column_hnf(&a, true);
            let v = h.v.clone().unwrap();
            prop_assert_eq!(a.mul(&v), h.h.clone());
            for j in h.rank()..a.cols() {
                prop_assert!(h.h.col(j).iter().all(Int::is_zero));
            }
            // every original column lies in the basis lattice, with solve witnessing it
            for j in 0..a.cols() {
                let x = h.solve(&a.col(j)).unwrap();
                prop_assert_eq!(a.mul_vec(&x), a.col(j));
            }
        }

        #[test]
        fn reduce_is_canonical(a in small_matrix(), w in proptest::collection::vec(-5i64..6, 6)) {
            let h = column_hnf(&a, false);
            let b: Vec<Int> = (0..a.rows()).map(|i| Int::from(i as i64 * 7 - 3)).collect();
            let mut shifted = b.clone();
            for j in 0..a.cols() {
                let c = Int::from(w[j]);
                for i in 0..a.rows() {
                    shifted[i] += &c * &a[(i, j)];
                }
            }
            prop_assert_eq!(h.reduce(&b), h.reduce(&shifted));
        }
    }
}
