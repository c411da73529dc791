use std::collections::HashMap;

use crate::gmodule::GModule;
use crate::int::Int;
use crate::lattice::IntMatrix;

use super::group::{FiniteGroup, GroupError, GroupHom};

/// A group extension `1 → A → E → G → 1` with finite abelian kernel.
#[derive(Clone, Debug)]
pub struct GroupExtension {
    pub gs: FiniteGroup,
    pub pi: GroupHom,
    /// `kappa[i]` is the image of the `i`-th kernel element (canonical enumeration order).
    pub kappa: Vec<usize>,
    /// Canonical coordinates of the kernel elements, in enumeration order.
    pub kernel_elements: Vec<Vec<Int>>,
}

impl GroupExtension {
    pub fn kernel_index(&self, c: &[Int]) -> usize {
        self.kernel_elements.iter().position(|x| x == c).expect("not a canonical kernel element")
    }
}

/// The extension of `G` by the finite module `A` with normalized 2-cocycle `c`.
///
/// Elements are pairs `(a, g)` with `(a, g)(b, h) = (a + g·b + c(g, h), gh)`,
/// stored at index `i·|G| + g` where `i` enumerates `A` canonically.
/// `cocycle(g, h)` returns canonical coordinates in `A`.
pub fn extension_from_cocycle(
    a: &GModule,
    g: &FiniteGroup,
    cocycle: &dyn Fn(usize, usize) -> Vec<Int>,
) -> Result<GroupExtension, GroupError> {
    let ab = a.ab();
    let elements = ab.canonical_elements().map_err(|_| GroupError::Invalid("kernel must be finite".into()))?;
    let index: HashMap<Vec<Int>, usize> = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
    let act: Vec<IntMatrix> = g.elements().map(|x| a.canonical_action(x)).collect();
    let n = g.order();
    let table_c: Vec<Vec<Int>> = (0..n * n).map(|k| ab.reduce_canon(&cocycle(k / n, k % n))).collect();
    let c = |x: usize, y: usize| &table_c[x * n + y];
    let add = |x: &[Int], y: &[Int]| ab.reduce_canon(&x.iter().zip(y).map(|(p, q)| p + q).collect::<Vec<_>>());
    let act_on = |x: usize, v: &[Int]| ab.reduce_canon(&act[x].mul_vec(v));
    let e = g.identity();
    for x in g.elements() {
        if c(e, x).iter().any(|v| !v.is_zero()) || c(x, e).iter().any(|v| !v.is_zero()) {
            return Err(GroupError::NotACocycle(vec![x, e, e]));
        }
    }
    for x in g.elements() {
        for y in g.elements() {
            for z in g.elements() {
                // x·c(y,z) + c(x,yz) = c(xy,z) + c(x,y)
                let lhs = add(&act_on(x, c(y, z)), c(x, g.mul(y, z)));
                let rhs = add(c(g.mul(x, y), z), c(x, y));
                if lhs != rhs {
                    return Err(GroupError::NotACocycle(vec![x, y, z]));
                }
            }
        }
    }
    let m = elements.len();
    let mut table = vec![vec![0usize; m * n]; m * n];
    for (i, ai) in elements.iter().enumerate() {
        for x in g.elements() {
            for (j, bj) in elements.iter().enumerate() {
                for y in g.elements() {
                    let s = add(&add(ai, &act_on(x, bj)), c(x, y));
                    table[i * n + x][j * n + y] = index[&s] * n + g.mul(x, y);
                }
            }
        }
    }
    let labels = (0..m * n)
        .map(|k| {
            let coords: Vec<String> = elements[k / n].iter().map(|v| v.to_string()).collect();
            format!("({};{})", coords.join(","), g.label(k % n))
        })
        .collect();
    let gs = FiniteGroup::from_table(table)?.with_labels(labels).with_name(&format!("E({})", g.name()));
    let pi = GroupHom { domain: gs.clone(), codomain: g.clone(), images: (0..m * n).map(|k| k % n).collect() };
    let kappa = (0..m).map(|i| i * n + e).collect();
    Ok(GroupExtension { gs, pi, kappa, kernel_elements: elements })
}
