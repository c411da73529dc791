use crate::int::Int;
use crate::lattice::{FgAb, IntMatrix};

use super::module::{GMap, GModule, GModuleError};

/// `Hom_Z(C, A)` with `(σf)(c) = σ·f(σ⁻¹c)`, for Z-free `C`.
///
/// Generators come in blocks, one per basis element `e_j` of `C`; block `j`
/// holds `f(e_j)` in the presentation of `A`.
pub fn hom(c: &GModule, a: &GModule) -> Result<GModule, GModuleError> {
    if !c.is_free() {
        return Err(GModuleError::NotFree);
    }
    if c.group() != a.group() {
        return Err(GModuleError::GroupMismatch);
    }
    let g = c.group();
    let (nc, na) = (c.ngens(), a.ngens());
    let rel = IntMatrix::block_diag(&vec![a.ab().relations(); nc]);
    let ab = FgAb::new(nc * na, rel);
    let action = g
        .elements()
        .map(|s| {
            let ci = c.action(g.inv(s));
            let asig = a.action(s);
            let mut m = IntMatrix::zeros(nc * na, nc * na);
            for j in 0..nc {
                for k in 0..nc {
                    let coef = &ci[(k, j)];
                    if !coef.is_zero() {
                        m.set_block(j * na, k * na, &asig.scale(coef));
                    }
                }
            }
            m
        })
        .collect();
    Ok(GModule::new_unchecked(g, ab, action))
}

/// Element of `Hom(C, A)` from the images of the basis of `C` (columns of `images`).
pub fn hom_element(images: &IntMatrix) -> Vec<Int> {
    images.columns().concat()
}

/// Images of the basis of `C` under an element of `Hom(C, A)` (columns).
pub fn hom_images(c: &GModule, a: &GModule, f: &[Int]) -> IntMatrix {
    let cols: Vec<Vec<Int>> = (0..c.ngens()).map(|j| f[j * a.ngens()..(j + 1) * a.ngens()].to_vec()).collect();
    IntMatrix::from_cols(a.ngens(), &cols)
}

/// `C ⊗_Z A` with diagonal action; generator `(i, j)` at index `i·n_A + j`.
pub fn tensor(c: &GModule, a: &GModule) -> Result<GModule, GModuleError> {
    if !(c.is_free() || c.is_finite() || a.is_free() || a.is_finite()) {
        return Err(GModuleError::UnsupportedTensor);
    }
    if c.group() != a.group() {
        return Err(GModuleError::GroupMismatch);
    }
    let g = c.group();
    let (nc, na) = (c.ngens(), a.ngens());
    let rel = c.ab().relations().kron(&IntMatrix::identity(na)).hcat(&IntMatrix::identity(nc).kron(a.ab().relations()));
    let ab = FgAb::new(nc * na, rel);
    let action = g.elements().map(|s| c.action(s).kron(a.action(s))).collect();
    Ok(GModule::new_unchecked(g, ab, action))
}

/// Elementary tensor `x ⊗ y`.
pub fn tensor_element(x: &[Int], y: &[Int]) -> Vec<Int> {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

/// Evaluation `C ⊗ Hom(C, A) → A`, `e_i ⊗ f ↦ f(e_i)`.
pub fn evaluation(c: &GModule, a: &GModule) -> Result<GMap, GModuleError> {
    let h = hom(c, a)?;
    let t = tensor(c, &h)?;
    let (nc, na) = (c.ngens(), a.ngens());
    let nh = h.ngens();
    let mut m = IntMatrix::zeros(na, nc * nh);
    for i in 0..nc {
        for l in 0..na {
            m[(l, i * nh + i * na + l)] = Int::ONE;
        }
    }
    GMap::new(t, a.clone(), m)
}

/// `f ⊗ g : C ⊗ A → C' ⊗ A'`.
pub fn tensor_map(f: &GMap, g: &GMap) -> Result<GMap, GModuleError> {
    let dom = tensor(&f.domain, &g.domain)?;
    let cod = tensor(&f.codomain, &g.codomain)?;
    GMap::new(dom, cod, f.matrix().kron(g.matrix()))
}
