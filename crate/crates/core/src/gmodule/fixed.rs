use crate::lattice::{homology_at, AbMap, FgAb, Homology, IntMatrix, LatticeError};

use super::module::GModule;

/// Fixed points, norm image and the two norm-modified groups.
pub struct FixedNorm {
    pub fixed: (FgAb, AbMap),
    pub norm_image: (FgAb, AbMap),
    /// `M^G / N·M`
    pub h0: Homology,
    /// `ker N / ⟨(σ − 1)m⟩`
    pub h1_neg_direct: Homology,
}

/// `m ↦ ((s − 1)m)_s` over the given group elements.
fn differences(m: &GModule, elems: &[usize]) -> AbMap {
    let n = m.ngens();
    let id = IntMatrix::identity(n);
    let mut mat = IntMatrix::zeros(n * elems.len(), n);
    for (k, &s) in elems.iter().enumerate() {
        mat.set_block(k * n, 0, &m.action(s).sub(&id));
    }
    let target = FgAb::direct_sum(&vec![m.ab().clone(); elems.len()]);
    AbMap::new_unchecked(m.ab().clone(), target, mat)
}

pub fn fixed_and_norm(m: &GModule) -> Result<FixedNorm, LatticeError> {
    let gens = m.group().generators();
    let diff = differences(m, &gens);
    let norm = AbMap::new_unchecked(m.ab().clone(), m.ab().clone(), m.norm_matrix());
    let fixed = diff.kernel();
    let norm_image = norm.image();
    let h0 = homology_at(&norm, &diff)?;
    let n = m.ngens();
    let id = IntMatrix::identity(n);
    let mut sum = IntMatrix::zeros(n, n * gens.len());
    for (k, &s) in gens.iter().enumerate() {
        sum.set_block(0, k * n, &m.action(s).sub(&id));
    }
    let src = FgAb::direct_sum(&vec![m.ab().clone(); gens.len()]);
    let d_in = AbMap::new_unchecked(src, m.ab().clone(), sum);
    let h1_neg_direct = homology_at(&d_in, &norm)?;
    Ok(FixedNorm { fixed, norm_image, h0, h1_neg_direct })
}
