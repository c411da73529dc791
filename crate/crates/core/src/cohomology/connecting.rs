use crate::gmodule::{is_short_exact, GMap, GModule};
use crate::int::Int;
use crate::lattice::{AbMap, IntMatrix, Preimager};

use super::cohomology::{apply_blockwise, cohomology, Cohomology};
use super::resolution::CompleteResolution;
use super::CohomologyError;

/// A short exact sequence `0 → A → B → C → 0` of G-modules.
#[derive(Clone, Debug)]
pub struct ExtensionData {
    pub iota: GMap,
    pub pi: GMap,
}

impl ExtensionData {
    pub fn new(iota: GMap, pi: GMap) -> Result<ExtensionData, CohomologyError> {
        if iota.codomain.ngens() != pi.domain.ngens() || iota.domain.group() != pi.codomain.group() {
            return Err(CohomologyError::NotExact("maps are not composable".into()));
        }
        if !is_short_exact(&iota, &pi) {
            return Err(CohomologyError::NotExact("sequence fails exactness".into()));
        }
        Ok(ExtensionData { iota, pi })
    }

    pub fn sub(&self) -> &GModule {
        &self.iota.domain
    }

    pub fn middle(&self) -> &GModule {
        &self.iota.codomain
    }

    pub fn quotient(&self) -> &GModule {
        &self.pi.codomain
    }
}

/// `δ : H^i(C) → H^{i+1}(A)` for an extension, with the underlying cochain chase.
#[derive(Clone, Debug)]
pub struct ConnectingHom {
    pub source: Cohomology,
    pub target: Cohomology,
    /// The map on canonical coordinates.
    pub map: AbMap,
    ext: ExtensionData,
    d_b: IntMatrix,
    section: Preimager,
    pullback: Preimager,
    blocks_in: usize,
    blocks_out: usize,
}

pub fn connecting_hom(res: &CompleteResolution, e: &ExtensionData, i: i32) -> Result<ConnectingHom, CohomologyError> {
    res.check_degree(i)?;
    res.check_degree(i + 1)?;
    let source = cohomology(res, e.quotient(), i)?;
    let target = cohomology(res, e.sub(), i + 1)?;
    let d_b = res.cochain_differential(i, e.middle());
    let mut hom = ConnectingHom {
        map: AbMap::zero(source.group(), target.group()),
        source,
        target,
        ext: e.clone(),
        d_b,
        section: e.pi.preimager(),
        pullback: e.iota.preimager(),
        blocks_in: res.cochain_rank(i),
        blocks_out: res.cochain_rank(i + 1),
    };
    let k = hom.source.group().canon_len();
    let cols = (0..k)
        .map(|j| {
            let z = hom.source.rep_of(&crate::lattice::matrix::unit(k, j));
            hom.target.class_of(&hom.chase(&z, None))
        })
        .collect::<Result<Vec<_>, _>>()?;
    hom.map = AbMap::new(
        hom.source.group().clone(),
        hom.target.group().clone(),
        IntMatrix::from_cols(hom.target.group().canon_len(), &cols),
    )?;
    Ok(hom)
}

impl ConnectingHom {
    pub fn extension(&self) -> &ExtensionData {
        &self.ext
    }

    /// Lifts a cocycle of `C` blockwise to `B`, adding `ι(perturb)` if given.
    pub fn lift(&self, z: &[Int], perturb: Option<&[Int]>) -> Vec<Int> {
        let nc = self.ext.quotient().ngens();
        let mut b = Vec::with_capacity(self.blocks_in * self.ext.middle().ngens());
        for j in 0..self.blocks_in {
            b.extend(self.section.preimage(&z[j * nc..(j + 1) * nc]).expect("projection is surjective"));
        }
        if let Some(a) = perturb {
            let ia = apply_blockwise(&self.ext.iota, a);
            for (x, y) in b.iter_mut().zip(ia) {
                *x += y;
            }
        }
        b
    }

    /// The zig-zag: lift, apply the differential of `B`, pull back to `A`.
    pub fn chase(&self, z: &[Int], perturb: Option<&[Int]>) -> Vec<Int> {
        let y = self.d_b.mul_vec(&self.lift(z, perturb));
        let nb = self.ext.middle().ngens();
        let mut out = Vec::with_capacity(self.blocks_out * self.ext.sub().ngens());
        for j in 0..self.blocks_out {
            out.extend(self.pullback.preimage(&y[j * nb..(j + 1) * nb]).expect("differential lands in the image of ι"));
        }
        out
    }

    pub fn apply(&self, coords: &[Int]) -> Vec<Int> {
        self.target.group().reduce_canon(&self.map.apply(coords))
    }
}
