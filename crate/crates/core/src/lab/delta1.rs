use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::cohomology::{bar_chain, cohomology, connecting_hom, Cohomology, ConnectingHom, ExtensionData};
use crate::gmodule::{GMap, GModule};
use crate::int::Int;
use crate::lattice::matrix::vec_add;
use crate::lattice::{AbMap, FgAb, IntMatrix};

use super::norm_suite::f_basis;
use super::{Cdc, Check, Lab, LabError};

/// `δ₁ : H^{-1}(G, Cl) → H^0(G, Ker s)` through the auxiliary coefficients, with the generic
/// connecting map of `0 → Ker s → R → Cl → 0` for comparison.
#[derive(Clone, Debug)]
pub struct Delta1 {
    pub kernel: GModule,
    pub incl: GMap,
    pub h0: Cohomology,
    pub generic: ConnectingHom,
}

impl Delta1 {
    /// `Σ a_q φ̄_q`.
    pub fn class_rep(&self, lab: &Lab, a: &[Int]) -> Vec<Int> {
        let inst = &lab.inst;
        let mut c = vec![Int::ZERO; inst.cl.ngens()];
        for (aq, q) in a.iter().zip(&inst.aux) {
            for (x, f) in c.iter_mut().zip(&q.frobenius) {
                *x += aq * f;
            }
        }
        inst.cl_reduce(&c)
    }

    /// The class of `(a_q N)_q` in `H^0(G, Ker s)`.
    pub fn apply(&self, lab: &Lab, a: &[Int]) -> Result<Vec<Int>, LabError> {
        let inst = &lab.inst;
        let c = self.class_rep(lab, a);
        if !inst.cl.is_zero(&inst.cl.norm(&c)) {
            return Err(LabError::NotNormKilled);
        }
        let wrb = &lab.wrb;
        let mut w = vec![Int::ZERO; wrb.w.ngens()];
        for (q, aq) in a.iter().enumerate() {
            let off = wrb.w_offsets[inst.places.len() + q];
            for x in inst.group.elements() {
                w[off + x] = aq.clone();
            }
        }
        let r = wrb.r_coords(&w).expect("auxiliary copies lie in R");
        let k = self.incl.preimager().preimage(&r).ok_or(LabError::NotNormKilled)?;
        Ok(self.h0.group().reduce_canon(&self.h0.class_of(&k)?))
    }

    /// The generic connecting map applied to the class of `Σ a_q φ̄_q`.
    pub fn generic_value(&self, lab: &Lab, a: &[Int]) -> Result<Vec<Int>, LabError> {
        let c = self.class_rep(lab, a);
        let z = bar_chain(&lab.res, &lab.inst.cl, &[], &c);
        Ok(self.generic.apply(&self.generic.source.class_of(&z)?))
    }
}

pub fn delta1(lab: &Lab) -> Result<Delta1, LabError> {
    let (kernel, incl) = lab.snake.s.kernel();
    let h0 = cohomology(&lab.res, &kernel, 0)?;
    let seq = ExtensionData::new(incl.clone(), lab.snake.s.clone())?;
    let generic = connecting_hom(&lab.res, &seq, -1)?;
    Ok(Delta1 { kernel, incl, h0, generic })
}

/// Basis of `{a : Σ a_q φ̄_q ∈ D(Cl)}`: coefficient vectors whose class in `H^{-1}(G, Cl)` is zero.
fn trivial_class_basis(lab: &Lab, cdc: &Cdc) -> IntMatrix {
    let inst = &lab.inst;
    let phi = IntMatrix::from_cols(inst.cl.ngens(), &inst.aux.iter().map(|q| q.frobenius.clone()).collect::<Vec<_>>());
    let to_cl = AbMap::new_unchecked(FgAb::free(inst.aux.len()), inst.cl.ab().clone(), phi);
    let (_, proj) = inst.cl.ab().quotient(&cdc.d.gens);
    to_cl.then(&proj).kernel().1.matrix
}

fn random_combination(basis: &IntMatrix, rng: &mut ChaCha8Rng) -> Vec<Int> {
    let mut v = vec![Int::ZERO; basis.rows()];
    for col in basis.columns() {
        let c = Int::from(rng.random_range(-2i64..=2));
        v = vec_add(&v, &col.iter().map(|x| x * &c).collect::<Vec<_>>());
    }
    v
}

/// `δ₁(a + b) = δ₁(a)` for random `a ∈ F` and `b` representing the zero class.
pub fn delta1_invariance(lab: &Lab, d: &Delta1, cdc: &Cdc, trials: usize, seed: u64) -> Result<Check, LabError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = f_basis(lab);
    let l = trivial_class_basis(lab, cdc);
    let mut counterexample = None;
    for _ in 0..trials {
        let a = random_combination(&f, &mut rng);
        let b = random_combination(&l, &mut rng);
        let lhs = d.apply(lab, &vec_add(&a, &b))?;
        let rhs = d.apply(lab, &a)?;
        if lhs != rhs {
            counterexample = Some(json!({"a": a, "b": b, "delta_a_plus_b": lhs, "delta_a": rhs}));
            break;
        }
    }
    Ok(Check::new(
        "delta1.representative_invariance",
        counterexample.is_none(),
        json!({"trials": trials, "seed": seed, "f_rank": f.cols(), "zero_class_rank": l.cols(), "counterexample": counterexample}),
    ))
}
