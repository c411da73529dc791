use crate::cft::Instance;
use crate::gmodule::{GMap, GModule};
use crate::int::Int;
use crate::lattice::{FgAb, IntMatrix};

/// `𝓗 = ΔG^S / J·ΔG^S` with `J = ker(ΔG^S → ΔG)`, in canonical presentation, and `e : Cl → 𝓗`.
#[derive(Clone, Debug)]
pub struct ScriptH {
    pub module: GModule,
    pub e: GMap,
    /// Canonical coordinates of the class of `h − 1` for every `h ∈ G^S`.
    pub class_of_gs: Vec<Vec<Int>>,
    /// Presentation on the generators `h − 1`, `h ≠ 1`.
    pres: FgAb,
    gs_gen: Vec<Option<usize>>,
}

impl ScriptH {
    /// Class of `h − 1`.
    pub fn class_of(&self, h: usize) -> &[Int] {
        &self.class_of_gs[h]
    }

    /// Class of `ŝ·(x − 1)` for any lift `ŝ`, computed as `(ŝx − 1) − (ŝ − 1)`.
    pub fn translate(&self, inst: &Instance, s_hat: usize, x: usize) -> Vec<Int> {
        let a = &self.class_of_gs[inst.gs.mul(s_hat, x)];
        let b = &self.class_of_gs[s_hat];
        self.reduce(&a.iter().zip(b).map(|(u, v)| u - v).collect::<Vec<_>>())
    }

    pub fn reduce(&self, c: &[Int]) -> Vec<Int> {
        self.module.ab().reduce_canon(c)
    }

    /// Action matrix of `g` on canonical coordinates computed through the lift `ŝ`.
    pub fn action_via(&self, inst: &Instance, s_hat: usize) -> IntMatrix {
        let ab = self.module.ab();
        let from = self.pres.from_canon_matrix();
        let cols: Vec<Vec<Int>> = (0..ab.ngens())
            .map(|j| {
                let v = from.col(j);
                let mut out = vec![Int::ZERO; ab.ngens()];
                for h in inst.gs.elements() {
                    if let Some(k) = self.gs_gen[h] {
                        if !v[k].is_zero() {
                            for (o, t) in out.iter_mut().zip(self.translate(inst, s_hat, h)) {
                                *o += &v[k] * &t;
                            }
                        }
                    }
                }
                ab.reduce_canon(&out)
            })
            .collect();
        IntMatrix::from_cols(ab.ngens(), &cols)
    }

    /// Whether the action of every `g` is the same for all of its lifts.
    pub fn action_lift_independent(&self, inst: &Instance) -> bool {
        inst.gs.elements().all(|s| {
            let a = self.action_via(inst, s);
            a == *self.module.action(inst.pi[s])
        })
    }
}

pub fn build_script_h(inst: &Instance) -> ScriptH {
    let gs = &inst.gs;
    let id = gs.identity();
    let mut gs_gen = vec![None; gs.order()];
    let mut k = 0;
    for h in gs.elements() {
        if h != id {
            gs_gen[h] = Some(k);
            k += 1;
        }
    }
    let e = |h: usize, v: &mut Vec<Int>, c: i64| {
        if let Some(i) = gs_gen[h] {
            v[i] += Int::from(c);
        }
    };
    // (x − 1)(z − 1) = e_{xz} − e_x − e_z; the generators x of κ(Cl) suffice.
    let ncl = inst.cl_orders.len();
    let mut rels = Vec::new();
    for j in 0..ncl {
        let x = inst.kappa_of(&crate::lattice::matrix::unit(ncl, j));
        for z in gs.elements() {
            let mut v = vec![Int::ZERO; k];
            e(gs.mul(x, z), &mut v, 1);
            e(x, &mut v, -1);
            e(z, &mut v, -1);
            if v.iter().any(|c| !c.is_zero()) {
                rels.push(v);
            }
        }
    }
    let pres = FgAb::new(k, IntMatrix::from_cols(k, &rels));
    let (canon, to, _) = pres.minimal();
    let class_of_gs: Vec<Vec<Int>> = gs
        .elements()
        .map(|h| match gs_gen[h] {
            Some(i) => canon.reduce_canon(&to.matrix.col(i)),
            None => canon.zero(),
        })
        .collect();
    let mut sh = ScriptH {
        module: GModule::trivial(&inst.group, canon.clone()),
        e: GMap::zero(&inst.cl, &inst.cl),
        class_of_gs,
        pres,
        gs_gen,
    };
    let action = inst.group.elements().map(|g| sh.action_via(inst, inst.lift(g))).collect();
    sh.module = GModule::new_unchecked(&inst.group, canon, action);
    let cols: Vec<Vec<Int>> =
        (0..ncl).map(|j| sh.class_of(inst.kappa_of(&crate::lattice::matrix::unit(ncl, j))).to_vec()).collect();
    sh.e = GMap::new_unchecked(inst.cl.clone(), sh.module.clone(), IntMatrix::from_cols(sh.module.ngens(), &cols));
    sh
}
