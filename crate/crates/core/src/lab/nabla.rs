use crate::cft::{Instance, XYModules};
use crate::cohomology::{extension_to_cocycle, is_coboundary, Cocycle1, CompleteResolution, ExtensionData};
use crate::gmodule::{hom_element, GMap, GModule};
use crate::int::Int;
use crate::lattice::IntMatrix;

use super::{r_element, LabError, SnakeMap, WrbData};

/// The pushout `∇ = (Cl ⊕ B)/⟨(s(r), −r)⟩`, its sequence `0 → Cl → ∇ → X → 0`,
/// `t : B → ∇`, the cocycle `g` and the extension cocycle of the sequence.
#[derive(Clone, Debug)]
pub struct NablaData {
    pub nabla: GModule,
    pub seq: ExtensionData,
    pub t: GMap,
    /// `σ ↦ (τp(L) − p0(L) ↦ s(r^{(p)}_{σ,τ}))` in `Hom(X, Cl)`.
    pub g: Cocycle1,
    /// The cocycle of the sequence read off a Z-section.
    pub ext_cocycle: Cocycle1,
}

impl NablaData {
    /// Whether the extension class equals the class of `g`.
    pub fn class_matches(&self, res: &CompleteResolution) -> bool {
        let diff: Vec<Int> =
            self.g.to_cochain().iter().zip(self.ext_cocycle.to_cochain()).map(|(a, b)| a - b).collect();
        is_coboundary(res, self.g.module(), 1, &diff)
    }

    /// Order of the torsion subgroup of `∇`.
    pub fn torsion_order(&self) -> usize {
        self.nabla.ab().factors().iter().map(|d| d.to_usize().unwrap()).product()
    }
}

pub fn build_nabla(inst: &Instance, xy: &XYModules, wrb: &WrbData, snake: &SnakeMap) -> Result<NablaData, LabError> {
    let cl = &inst.cl;
    let (sum, inj, _) = GModule::direct_sum(&[cl.clone(), wrb.b.clone()])?;
    let ncl = cl.ngens();
    let cols: Vec<Vec<Int>> = (0..wrb.r.ngens())
        .map(|j| {
            let e = crate::lattice::matrix::unit(wrb.r.ngens(), j);
            let mut v = snake.s.apply(&e);
            v.extend(wrb.r_to_b.apply(&e).iter().map(|x| -x));
            v
        })
        .collect();
    let (nabla, proj) = sum.quotient(&IntMatrix::from_cols(sum.ngens(), &cols));
    let i = inj[0].then(&proj);
    let t = inj[1].then(&proj);
    let to_x = IntMatrix::zeros(xy.x.ngens(), ncl).hcat(wrb.b_to_x.matrix());
    let pre = proj.preimager();
    let m: Vec<Vec<Int>> = (0..nabla.ngens())
        .map(|j| to_x.mul_vec(&pre.preimage(&nabla.ab().gen(j)).expect("quotient map is surjective")))
        .collect();
    let pi = GMap::new(nabla.clone(), xy.x.clone(), IntMatrix::from_cols(xy.x.ngens(), &m))?;
    let seq = ExtensionData::new(i, pi)?;
    let (ext_cocycle, _) = extension_to_cocycle(&seq)?;
    let g = inst.group.elements().map(|sigma| {
        let imgs = xy
            .x_basis
            .iter()
            .map(|&(p, tau)| Ok(snake.apply_r(inst, &r_element(inst, wrb, p, sigma, tau)?)))
            .collect::<Result<Vec<_>, LabError>>()?;
        Ok(hom_element(&IntMatrix::from_cols(ncl, &imgs)))
    });
    let g = Cocycle1::new(ext_cocycle.module(), g.collect::<Result<Vec<_>, LabError>>()?)?;
    Ok(NablaData { nabla, seq, t, g, ext_cocycle })
}
