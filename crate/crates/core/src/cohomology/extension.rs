use crate::gmodule::{aug_ideal, hom, hom_images, regular, GMap, GModule, GModuleError};
use crate::int::Int;
use crate::lattice::{FgAb, IntMatrix};

use super::cohomology::{cohomology, CohClass};
use super::connecting::{connecting_hom, ConnectingHom, ExtensionData};
use super::resolution::CompleteResolution;
use super::CohomologyError;

/// A normalized 1-cocycle `G → M`, one value per group element.
#[derive(Clone, Debug)]
pub struct Cocycle1 {
    module: GModule,
    values: Vec<Vec<Int>>,
}

impl Cocycle1 {
    pub fn new(module: &GModule, values: Vec<Vec<Int>>) -> Result<Cocycle1, CohomologyError> {
        let g = module.group();
        if values.len() != g.order() || values.iter().any(|v| v.len() != module.ngens()) {
            return Err(CohomologyError::NotACocycle);
        }
        if !module.is_zero(&values[g.identity()]) {
            return Err(CohomologyError::NotACocycle);
        }
        for s in g.elements() {
            for t in g.elements() {
                let st = &values[g.mul(s, t)];
                let rhs: Vec<Int> =
                    values[s].iter().zip(module.act(s, &values[t])).map(|(a, b)| a + b).collect();
                if !module.eq_elems(st, &rhs) {
                    return Err(CohomologyError::NotACocycle);
                }
            }
        }
        Ok(Cocycle1 { module: module.clone(), values })
    }

    /// Reads a cocycle from a degree-1 cochain.
    pub fn from_cochain(module: &GModule, c: &[Int]) -> Result<Cocycle1, CohomologyError> {
        let k = module.ngens();
        let n = module.group().order();
        if c.len() != n * k {
            return Err(CohomologyError::NotACocycle);
        }
        Cocycle1::new(module, (0..n).map(|s| c[s * k..(s + 1) * k].to_vec()).collect())
    }

    pub fn zero(module: &GModule) -> Cocycle1 {
        Cocycle1 { module: module.clone(), values: vec![module.zero(); module.group().order()] }
    }

    /// The principal cocycle `σ ↦ σm − m`.
    pub fn coboundary(module: &GModule, m: &[Int]) -> Cocycle1 {
        let values = module.group().elements().map(|s| module.act(s, m).iter().zip(m).map(|(a, b)| a - b).collect()).collect();
        Cocycle1 { module: module.clone(), values }
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn value(&self, s: usize) -> &[Int] {
        &self.values[s]
    }

    pub fn values(&self) -> &[Vec<Int>] {
        &self.values
    }

    pub fn to_cochain(&self) -> Vec<Int> {
        self.values.concat()
    }

    pub fn class(&self, res: &CompleteResolution) -> Result<CohClass, CohomologyError> {
        cohomology(res, &self.module, 1)?.class(&self.to_cochain())
    }
}

/// Extension `0 → A → A ⊕ C → C → 0` built from a cocycle in `Hom(C, A)`, with its Z-section.
#[derive(Clone, Debug)]
pub struct ExtensionFromCocycle {
    pub ext: ExtensionData,
    pub section: IntMatrix,
}

/// `σ(a, c) = (σa + f(σ)(σc), σc)` on `A ⊕ C`.
pub fn cocycle_to_extension(c: &GModule, a: &GModule, f: &Cocycle1) -> Result<ExtensionFromCocycle, CohomologyError> {
    if !c.is_free() {
        return Err(GModuleError::NotFree.into());
    }
    let h = hom(c, a)?;
    if h.ngens() != f.module().ngens() {
        return Err(CohomologyError::GroupMismatch);
    }
    let g = c.group();
    let (na, nc) = (a.ngens(), c.ngens());
    let ab = FgAb::direct_sum(&[a.ab().clone(), c.ab().clone()]);
    let action = g
        .elements()
        .map(|s| {
            let fs = hom_images(c, a, f.value(s));
            let mut m = IntMatrix::zeros(na + nc, na + nc);
            m.set_block(0, 0, a.action(s));
            m.set_block(0, na, &fs.mul(c.action(s)));
            m.set_block(na, na, c.action(s));
            m
        })
        .collect();
    let b = GModule::new(g, ab, action)?;
    let iota = GMap::new(a.clone(), b.clone(), IntMatrix::identity(na).vcat(&IntMatrix::zeros(nc, na)))?;
    let pi = GMap::new(b, c.clone(), IntMatrix::zeros(nc, na).hcat(&IntMatrix::identity(nc)))?;
    let section = IntMatrix::zeros(na, nc).vcat(&IntMatrix::identity(nc));
    Ok(ExtensionFromCocycle { ext: ExtensionData::new(iota, pi)?, section })
}

/// The cocycle `σ ↦ ι⁻¹(σ s σ⁻¹ − s)` of an extension with Z-free quotient, and the section `s` used.
pub fn extension_to_cocycle(e: &ExtensionData) -> Result<(Cocycle1, IntMatrix), CohomologyError> {
    let (a, b, c) = (e.sub(), e.middle(), e.quotient());
    if !c.is_free() {
        return Err(GModuleError::NotFree.into());
    }
    let g = c.group();
    let pre = e.pi.preimager();
    let cols: Vec<Vec<Int>> =
        (0..c.ngens()).map(|j| pre.preimage(&crate::lattice::matrix::unit(c.ngens(), j)).expect("surjective")).collect();
    let s = IntMatrix::from_cols(b.ngens(), &cols);
    let back = e.iota.preimager();
    let h = hom(c, a)?;
    let values = g
        .elements()
        .map(|x| {
            let t = b.action(x).mul(&s).mul(c.action(g.inv(x))).sub(&s);
            let imgs: Vec<Vec<Int>> =
                t.columns().iter().map(|col| back.preimage(col).expect("lands in the image of ι")).collect();
            crate::gmodule::hom_element(&IntMatrix::from_cols(a.ngens(), &imgs))
        })
        .collect();
    Ok((Cocycle1::new(&h, values)?, s))
}

/// The equivalence `A ⊕_f C → B`, `(a, c) ↦ ι(a) + s(c)`, between the extension rebuilt
/// from `extension_to_cocycle(e)` and `e` itself.
pub fn extension_equivalence(e: &ExtensionData) -> Result<GMap, CohomologyError> {
    let (f, s) = extension_to_cocycle(e)?;
    let rebuilt = cocycle_to_extension(e.quotient(), e.sub(), &f)?;
    Ok(GMap::new(rebuilt.ext.middle().clone(), e.middle().clone(), e.iota.matrix().hcat(&s))?)
}

/// `0 → A → Hom(Z[G], A) → Hom(ΔG, A) → 0`.
pub fn aug_hom_sequence(a: &GModule) -> Result<ExtensionData, CohomologyError> {
    let g = a.group();
    let n = g.order();
    let na = a.ngens();
    let e = g.identity();
    let reg = regular(g);
    let (dg, _) = aug_ideal(g);
    let hz = hom(&reg, a)?;
    let hd = hom(&dg, a)?;
    let mut inc = IntMatrix::zeros(n * na, na);
    for x in 0..n {
        inc.set_block(x * na, 0, &IntMatrix::identity(na));
    }
    let mut res = IntMatrix::zeros((n - 1) * na, n * na);
    for (j, x) in g.elements().filter(|&x| x != e).enumerate() {
        res.set_block(j * na, x * na, &IntMatrix::identity(na));
        res.set_block(j * na, e * na, &IntMatrix::identity(na).neg());
    }
    let iota = GMap::new(a.clone(), hz.clone(), inc)?;
    let pi = GMap::new(hz, hd, res)?;
    ExtensionData::new(iota, pi)
}

/// The map `H^1(Hom(ΔG, A)) → H^2(A)` given by the connecting homomorphism.
pub fn ext1_aug_map(res: &CompleteResolution, a: &GModule) -> Result<ConnectingHom, CohomologyError> {
    connecting_hom(res, &aug_hom_sequence(a)?, 1)
}

/// Class in `H^2(G, A)` of the extension of `ΔG` by `A` described by `f`.
pub fn ext1_aug_to_h2(res: &CompleteResolution, a: &GModule, f: &Cocycle1) -> Result<CohClass, CohomologyError> {
    let d = ext1_aug_map(res, a)?;
    let h = d.source.class_of(&f.to_cochain())?;
    Ok(d.target.class_from_coords(&d.apply(&h)))
}
