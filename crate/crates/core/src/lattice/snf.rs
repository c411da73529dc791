//! Smith normal form.

use std::collections::BTreeMap;

use crate::int::Int;
use crate::lattice::matrix::IntMatrix;

/// `U · A · V = D` with `D` diagonal, `d_1 | d_2 | ...`, all `d_i >= 0`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub diag: Vec<Int>,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn d(&self) -> IntMatrix {
        IntMatrix::diagonal(self.u.rows(), self.v.rows(), &self.diag)
    }
}

struct Work {
    a: IntMatrix,
    u: Option<(IntMatrix, IntMatrix)>,
    v: Option<IntMatrix>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, k: usize) {
        self.a.swap_rows(i, k);
        if let Some((u, ui)) = self.u.as_mut() {
            u.swap_rows(i, k);
            ui.swap_cols(i, k);
        }
    }
    fn swap_cols(&mut self, i: usize, k: usize) {
        self.a.swap_cols(i, k);
        if let Some(v) = self.v.as_mut() {
            v.swap_cols(i, k);
        }
    }
    fn add_row(&mut self, dst: usize, src: usize, c: &Int) {
        self.a.add_row_multiple(dst, src, c);
        if let Some((u, ui)) = self.u.as_mut() {
            u.add_row_multiple(dst, src, c);
            ui.add_col_multiple(src, dst, &-c);
        }
    }
    fn add_col(&mut self, dst: usize, src: usize, c: &Int) {
        self.a.add_col_multiple(dst, src, c);
        if let Some(v) = self.v.as_mut() {
            v.add_col_multiple(dst, src, c);
        }
    }
    fn combine_rows(&mut self, i: usize, k: usize, a: &Int, b: &Int, c: &Int, d: &Int) {
        self.a.combine_rows(i, k, a, b, c, d);
        if let Some((u, ui)) = self.u.as_mut() {
            u.combine_rows(i, k, a, b, c, d);
            ui.combine_cols(i, k, d, &-c, &-b, a);
        }
    }
    fn combine_cols(&mut self, i: usize, k: usize, a: &Int, b: &Int, c: &Int, d: &Int) {
        self.a.combine_cols(i, k, a, b, c, d);
        if let Some(v) = self.v.as_mut() {
            v.combine_cols(i, k, a, b, c, d);
        }
    }
    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some((u, ui)) = self.u.as_mut() {
            u.negate_row(i);
            ui.negate_col(i);
        }
    }

    fn run(&mut self) {
        let (m, n) = (self.a.rows(), self.a.cols());
        for t in 0..m.min(n) {
            let Some((pi, pj)) = self.min_entry(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                self.clear_column(t);
                self.clear_row(t);
                if (t + 1..m).any(|i| !self.a[(i, t)].is_zero()) {
                    continue;
                }
                let p = self.a[(t, t)].clone();
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !p.divides(&self.a[(i, j)])));
                match bad {
                    Some(i) => self.add_row(t, i, &Int::ONE),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
        }
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, Int)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|b| ax < b.2) {
                    let unit = ax.is_one();
                    best = Some((i, j, ax));
                    if unit {
                        return best.map(|b| (b.0, b.1));
                    }
                }
            }
        }
        best.map(|b| (b.0, b.1))
    }

    fn clear_column(&mut self, t: usize) {
        for i in t + 1..self.a.rows() {
            let b = self.a[(i, t)].clone();
            if b.is_zero() {
                continue;
            }
            let p = self.a[(t, t)].clone();
            if p.divides(&b) {
                self.add_row(i, t, &-b.div_exact(&p));
            } else {
                let (g, x, y) = Int::ext_gcd(&p, &b);
                let (pg, bg) = (p.div_exact(&g), b.div_exact(&g));
                self.combine_rows(t, i, &x, &y, &-bg, &pg);
            }
        }
    }

    fn clear_row(&mut self, t: usize) {
        for j in t + 1..self.a.cols() {
            let b = self.a[(t, j)].clone();
            if b.is_zero() {
                continue;
            }
            let p = self.a[(t, t)].clone();
            if p.divides(&b) {
                self.add_col(j, t, &-b.div_exact(&p));
            } else {
                let (g, x, y) = Int::ext_gcd(&p, &b);
                let (pg, bg) = (p.div_exact(&g), b.div_exact(&g));
                self.combine_cols(t, j, &x, &y, &-bg, &pg);
            }
        }
    }

    fn diag(&self) -> Vec<Int> {
        (0..self.a.rows().min(self.a.cols())).map(|i| self.a[(i, i)].clone()).collect()
    }
}

/// Left transforms only: `(diag, U, U⁻¹)` with `U · A · V = D` for some unimodular `V`.
pub fn smith_left(a: &IntMatrix) -> (Vec<Int>, IntMatrix, IntMatrix) {
    let mut w = Work {
        a: a.clone(),
        u: Some((IntMatrix::identity(a.rows()), IntMatrix::identity(a.rows()))),
        v: None,
    };
    w.run();
    let diag = w.diag();
    let (u, u_inv) = w.u.unwrap();
    (diag, u, u_inv)
}

/// Smith normal form with unimodular transforms `U`, `U⁻¹`, `V`.
pub fn smith(a: &IntMatrix) -> Snf {
    let mut w = Work {
        a: a.clone(),
        u: Some((IntMatrix::identity(a.rows()), IntMatrix::identity(a.rows()))),
        v: Some(IntMatrix::identity(a.cols())),
    };
    w.run();
    let diag = w.diag();
    let (u, u_inv) = w.u.unwrap();
    Snf { diag, u, u_inv, v: w.v.unwrap() }
}

/// Diagonal of the Smith form (length `min(rows, cols)`), without transforms.
///
/// Unit pivots are first eliminated on a sparse copy, which keeps the large
/// differentials of bar resolutions tractable.
pub fn invariant_factors(a: &IntMatrix) -> Vec<Int> {
    let len = a.rows().min(a.cols());
    let mat = if a.rows() <= a.cols() { a.clone() } else { a.transpose() };
    let mut rows: Vec<BTreeMap<usize, Int>> = (0..mat.rows())
        .map(|i| {
            mat.row(i)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, x.clone()))
                .collect()
        })
        .collect();
    let mut ones = 0usize;
    let mut alive: Vec<bool> = vec![true; rows.len()];
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, r) in rows.iter().enumerate() {
            if !alive[i] {
                continue;
            }
            if let Some((&j, _)) = r.iter().find(|(_, x)| x.abs().is_one()) {
                if best.is_none_or(|b| r.len() < b.2) {
                    best = Some((i, j, r.len()));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        alive[pi] = false;
        let prow = std::mem::take(&mut rows[pi]);
        let pval = prow[&pj].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if !alive[i] {
                continue;
            }
            let Some(b) = r.get(&pj).cloned() else { continue };
            let c = -(&b * &pval);
            for (j, x) in &prow {
                let e = r.entry(*j).or_insert(Int::ZERO);
                *e += &c * x;
                if e.is_zero() {
                    r.remove(j);
                }
            }
        }
        ones += 1;
    }
    let rest: Vec<&BTreeMap<usize, Int>> =
        rows.iter().enumerate().filter(|(i, r)| alive[*i] && !r.is_empty()).map(|(_, r)| r).collect();
    let mut cols: Vec<usize> = rest.iter().flat_map(|r| r.keys().copied()).collect();
    cols.sort_unstable();
    cols.dedup();
    let mut dense = IntMatrix::zeros(rest.len(), cols.len());
    for (i, r) in rest.iter().enumerate() {
        for (j, x) in r.iter() {
            let c = cols.binary_search(j).unwrap();
            dense[(i, c)] = x.clone();
        }
    }
    let mut w = Work { a: dense, u: None, v: None };
    w.run();
    let mut out = vec![Int::ONE; ones];
    out.extend(w.diag().into_iter().filter(|d| !d.is_zero()));
    out.resize(len, Int::ZERO);
    out
}
