use std::collections::VecDeque;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gmodule::{aug_ideal, induced, tensor, GModule};
use crate::groups::{extension_from_cocycle, FiniteGroup, Subgroup};
use crate::int::Int;
use crate::lattice::FgAb;

use super::{CftError, Instance};

const MAX_GROUP: usize = 16;
const MAX_CL: usize = 64;
const ENUMERATION_CAP: usize = 1 << 16;
const SAMPLE_ATTEMPTS: usize = 20_000;

/// A summand of the class group.
#[derive(Clone, Debug)]
pub enum ClPiece {
    /// `Z/m` with trivial action.
    Trivial(usize),
    /// `Z/m[G/H]`.
    Permutation { modulus: usize, subgroup: Subgroup },
    /// `ΔG ⊗ Z/m`.
    Augmentation(usize),
}

/// How the section at a non-distinguished place differs from `ι_{p0}`.
#[derive(Clone, Debug)]
pub enum Twist {
    None,
    /// A uniformly sampled 1-cocycle `G_p → Cl`.
    Random,
    /// Explicit values `a(τ)` in `Cl` coordinates, aligned with the sorted subgroup elements;
    /// `ι_p(τ) = κ(a(τ)) ι_{p0}(τ)`.
    Cocycle(Vec<Vec<Int>>),
}

#[derive(Clone, Debug)]
pub enum ExtensionSpec {
    Split,
    /// The split extension presented through a random coboundary 2-cocycle.
    RandomCoboundary,
    /// An explicit normalized 2-cocycle, `c[g][h]` in `Cl` coordinates.
    Cocycle(Vec<Vec<Vec<Int>>>),
}

#[derive(Clone, Debug)]
pub enum AuxSpec {
    /// This many places with random Frobenius classes that generate `Cl`.
    Random(usize),
    Explicit(Vec<Vec<Int>>),
}

#[derive(Clone, Debug)]
pub struct SynthParams {
    pub name: String,
    pub group: FiniteGroup,
    /// Decomposition groups and twists of the places other than `p0`.
    pub places: Vec<(Subgroup, Twist)>,
    pub cl: Vec<ClPiece>,
    pub extension: ExtensionSpec,
    pub aux: AuxSpec,
    pub seed: u64,
}

/// Extends `gens[i] ↦ images[i]` multiplicatively over the subgroup generated by `gens`.
///
/// Returns `None` if the assignment is not a homomorphism; entries outside the
/// generated subgroup are `None`.
pub fn extend_hom(
    domain: &FiniteGroup,
    gens: &[usize],
    codomain: &FiniteGroup,
    images: &[usize],
) -> Option<Vec<Option<usize>>> {
    let mut f = vec![None; domain.order()];
    f[domain.identity()] = Some(codomain.identity());
    let mut queue = VecDeque::from([domain.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = f[x].unwrap();
        for (&s, &t) in gens.iter().zip(images) {
            let y = domain.mul(x, s);
            let fy = codomain.mul(fx, t);
            match f[y] {
                None => {
                    f[y] = Some(fy);
                    queue.push_back(y);
                }
                Some(v) if v != fy => return None,
                _ => {}
            }
        }
    }
    Some(f)
}

fn subgroup_generators(h: &Subgroup) -> Vec<usize> {
    let g = h.group();
    let mut gens = Vec::new();
    let mut span = Subgroup::trivial(g);
    for &x in h.elements() {
        if !span.contains(x) {
            gens.push(x);
            span = Subgroup::generated(g, &gens);
        }
    }
    gens
}

fn cl_module(g: &FiniteGroup, pieces: &[ClPiece]) -> Result<(GModule, Vec<usize>), CftError> {
    let mut parts = Vec::new();
    for piece in pieces {
        let (base, m) = match piece {
            ClPiece::Trivial(m) => (crate::gmodule::trivial_z(g), *m),
            ClPiece::Permutation { modulus, subgroup } => (induced(g, subgroup), *modulus),
            ClPiece::Augmentation(m) => (aug_ideal(g).0, *m),
        };
        if m < 2 {
            return Err(CftError::UnsatisfiableParams("class group summands need modulus at least 2".into()));
        }
        let zm = GModule::trivial(g, FgAb::cyclic(m as i64));
        parts.push(tensor(&base, &zm).map_err(|e| CftError::InvalidInstance(e.to_string()))?);
    }
    if parts.is_empty() {
        let m = GModule::trivial(g, FgAb::trivial());
        return Ok((m, vec![]));
    }
    let (sum, _, _) = GModule::direct_sum(&parts).map_err(|e| CftError::InvalidInstance(e.to_string()))?;
    let size = sum.ab().order().and_then(|o| o.to_usize()).unwrap_or(usize::MAX);
    if size > MAX_CL {
        return Err(CftError::UnsatisfiableParams(format!("class group of order {size} exceeds {MAX_CL}")));
    }
    let (m, _, _) = sum.minimal();
    let orders = m.ab().factors().iter().map(|d| d.to_usize().unwrap()).collect();
    Ok((m, orders))
}

/// All (or, past the cap, sampled) sections of `pi` over `h`, relative to fixed fibre representatives.
fn sections(
    h: &Subgroup,
    gs: &FiniteGroup,
    fibre: &dyn Fn(usize) -> Vec<usize>,
    rng: &mut ChaCha8Rng,
    want_all: bool,
) -> Vec<Vec<usize>> {
    let g = h.group();
    let gens = subgroup_generators(h);
    let fibres: Vec<Vec<usize>> = gens.iter().map(|&s| fibre(s)).collect();
    let total = fibres.iter().try_fold(1usize, |acc, f| acc.checked_mul(f.len())).unwrap_or(usize::MAX);
    let to_table = |f: Vec<Option<usize>>| h.elements().iter().map(|&x| f[x].unwrap()).collect::<Vec<_>>();
    let mut found = Vec::new();
    if total <= ENUMERATION_CAP {
        for mut k in 0..total {
            let mut images = Vec::with_capacity(gens.len());
            for f in fibres.iter().rev() {
                images.push(f[k % f.len()]);
                k /= f.len();
            }
            images.reverse();
            if let Some(f) = extend_hom(g, &gens, gs, &images) {
                found.push(to_table(f));
                if !want_all {
                    break;
                }
            }
        }
    } else {
        for _ in 0..SAMPLE_ATTEMPTS {
            let images: Vec<usize> = fibres.iter().map(|f| f[rng.random_range(0..f.len())]).collect();
            if let Some(f) = extend_hom(g, &gens, gs, &images) {
                found.push(to_table(f));
                break;
            }
        }
    }
    found
}

/// Builds a validated synthetic instance. Deterministic in `params.seed`.
pub fn synth_instance(params: &SynthParams) -> Result<Instance, CftError> {
    let g = &params.group;
    if g.order() > MAX_GROUP {
        return Err(CftError::UnsatisfiableParams(format!("group order {} exceeds {MAX_GROUP}", g.order())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let (cl, orders) = cl_module(g, &params.cl)?;
    let ab = cl.ab().clone();
    let classes = ab.canonical_elements().expect("finite");
    let n = g.order();
    let act = |x: usize, v: &[Int]| ab.reduce_canon(&cl.act(x, v));
    let cocycle: Vec<Vec<Vec<Int>>> = match &params.extension {
        ExtensionSpec::Split => vec![vec![ab.zero(); n]; n],
        ExtensionSpec::RandomCoboundary => {
            let mut b: Vec<Vec<Int>> = g.elements().map(|_| classes[rng.random_range(0..classes.len())].clone()).collect();
            b[g.identity()] = ab.zero();
            // (δb)(x, y) = x·b(y) − b(xy) + b(x)
            g.elements()
                .map(|x| {
                    g.elements()
                        .map(|y| {
                            let v: Vec<Int> = act(x, &b[y])
                                .iter()
                                .zip(&b[g.mul(x, y)])
                                .zip(&b[x])
                                .map(|((p, q), r)| p - q + r)
                                .collect();
                            ab.reduce_canon(&v)
                        })
                        .collect()
                })
                .collect()
        }
        ExtensionSpec::Cocycle(c) => c.clone(),
    };
    let ext = extension_from_cocycle(&cl, g, &|x, y| cocycle[x][y].clone())?;
    let gs = ext.gs.clone();
    let pi = ext.pi.images.clone();
    let kappa = ext.kappa.clone();
    let fibre = |s: usize| -> Vec<usize> { (0..classes.len()).map(|i| i * n + s).collect() };

    let whole = Subgroup::whole(g);
    let iota0 = sections(&whole, &gs, &fibre, &mut rng, false)
        .into_iter()
        .next()
        .ok_or_else(|| CftError::UnsatisfiableParams("G^S does not split over G, so no place has full decomposition group".into()))?;
    let kappa_of = |c: &[Int]| kappa[classes.iter().position(|x| x.as_slice() == ab.reduce_canon(c).as_slice()).unwrap()];

    let mut places = vec![("p0".to_string(), whole.clone(), true, iota0.clone())];
    for (k, (h, twist)) in params.places.iter().enumerate() {
        if h.group() != g {
            return Err(CftError::UnsatisfiableParams("decomposition group of the wrong group".into()));
        }
        let restricted: Vec<usize> = h.elements().iter().map(|&x| iota0[x]).collect();
        let iota = match twist {
            Twist::None => restricted,
            Twist::Random => {
                let mut all = sections(h, &gs, &fibre, &mut rng, true);
                if all.len() > 1 {
                    all.retain(|t| *t != restricted);
                }
                if all.is_empty() {
                    restricted
                } else {
                    all[rng.random_range(0..all.len())].clone()
                }
            }
            Twist::Cocycle(a) => {
                if a.len() != h.order() {
                    return Err(CftError::UnsatisfiableParams("twist needs one value per subgroup element".into()));
                }
                let t: Vec<usize> = restricted.iter().zip(a).map(|(&s, c)| gs.mul(kappa_of(c), s)).collect();
                for (i, &x) in h.elements().iter().enumerate() {
                    for (j, &y) in h.elements().iter().enumerate() {
                        let xy = h.position(g.mul(x, y)).unwrap();
                        if t[xy] != gs.mul(t[i], t[j]) {
                            return Err(CftError::UnsatisfiableParams("twist is not a 1-cocycle".into()));
                        }
                    }
                }
                t
            }
        };
        places.push((format!("p{}", k + 1), h.clone(), false, iota));
    }

    let mut inst = Instance::new(&params.name, g.clone(), places, vec![], cl, orders, gs, pi, kappa);
    let frob: Vec<Vec<Int>> = match &params.aux {
        AuxSpec::Explicit(v) => v.iter().map(|c| ab.reduce_canon(c)).collect(),
        AuxSpec::Random(count) => {
            let mut chosen = None;
            for _ in 0..64 {
                let pick: Vec<Vec<Int>> = (0..*count).map(|_| classes.choose(&mut rng).unwrap().clone()).collect();
                inst.aux = pick.iter().map(|c| aux_place(&inst, 0, c)).collect();
                if inst.frobenius_generate() {
                    chosen = Some(pick);
                    break;
                }
            }
            chosen.ok_or_else(|| CftError::UnsatisfiableParams(format!("{count} random classes do not generate Cl")))?
        }
    };
    inst.aux = frob.iter().enumerate().map(|(i, c)| aux_place(&inst, i, c)).collect();
    let report = inst.validate();
    if let Some(v) = report.violations.first() {
        return Err(CftError::UnsatisfiableParams(format!("{}: {}", v.code, v.message)));
    }
    Ok(inst)
}

fn aux_place(inst: &Instance, i: usize, c: &[Int]) -> super::AuxPlace {
    super::AuxPlace { id: format!("q{}", i + 1), frobenius: c.to_vec(), subgroup: Subgroup::trivial(&inst.group) }
}

fn i2(name: &str, twisted: bool) -> Instance {
    let c2 = FiniteGroup::cyclic(2);
    let a = if twisted { vec![vec![Int::ZERO], vec![Int::ONE]] } else { vec![vec![Int::ZERO]; 2] };
    let params = SynthParams {
        name: name.into(),
        group: c2.clone(),
        places: vec![(Subgroup::whole(&c2), Twist::Cocycle(a))],
        cl: vec![ClPiece::Trivial(2)],
        extension: ExtensionSpec::Split,
        aux: AuxSpec::Explicit(vec![vec![Int::ONE]]),
        seed: 0,
    };
    synth_instance(&params).expect("worked instance is valid")
}

/// `G = C₂`, two places with full decomposition group, `Cl = Z/2`, `G^S = Z/2 × C₂`,
/// `ι_{p0}(σ) = (0, σ)`, `ι_p(σ) = (1, σ)`, one auxiliary place with `φ̄_q = 1`.
pub fn i2_twist() -> Instance {
    i2("I2-twist", true)
}

/// As [`i2_twist`] with `ι_p = ι_{p0}`.
pub fn i2_plain() -> Instance {
    i2("I2-plain", false)
}

/// Random parameters for the self-test campaign over `group`.
pub fn campaign_params(group: &FiniteGroup, seed: u64) -> SynthParams {
    let salt = group.name().bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt);
    let subs = group.small_subgroups();
    let nontrivial: Vec<&Subgroup> = subs.iter().filter(|h| h.order() > 1).collect();
    let n_places = rng.random_range(1..=2);
    let places = (0..n_places)
        .map(|_| {
            let h = match nontrivial.choose(&mut rng) {
                Some(h) if rng.random_bool(0.85) => (*h).clone(),
                _ => subs.choose(&mut rng).unwrap().clone(),
            };
            let twist = if rng.random_bool(0.8) { Twist::Random } else { Twist::None };
            (h, twist)
        })
        .collect();
    let budget = 32usize;
    let mut cl = Vec::new();
    let mut size = 1usize;
    for _ in 0..rng.random_range(1..=2) {
        let piece = match rng.random_range(0..4) {
            0 => ClPiece::Trivial(*[2usize, 3, 4].choose(&mut rng).unwrap()),
            2 => {
                let proper: Vec<&Subgroup> = subs.iter().filter(|h| h.index() > 1).collect();
                match proper.choose(&mut rng) {
                    Some(h) => ClPiece::Permutation { modulus: *[2usize, 3].choose(&mut rng).unwrap(), subgroup: (*h).clone() },
                    None => ClPiece::Trivial(2),
                }
            }
            1 if group.order() > 1 => ClPiece::Permutation { modulus: *[2usize, 3].choose(&mut rng).unwrap(), subgroup: Subgroup::trivial(group) },
            _ => ClPiece::Augmentation(*[2usize, 3].choose(&mut rng).unwrap()),
        };
        let piece_size = match &piece {
            ClPiece::Trivial(m) => *m,
            ClPiece::Permutation { modulus, subgroup } => modulus.pow(subgroup.index() as u32),
            ClPiece::Augmentation(m) => m.pow(group.order() as u32 - 1),
        };
        if size * piece_size <= budget {
            size *= piece_size;
            cl.push(piece);
        }
    }
    if cl.is_empty() {
        cl.push(ClPiece::Trivial(*[2usize, 3].choose(&mut rng).unwrap()));
    }
    let extension = if rng.random_bool(0.5) { ExtensionSpec::Split } else { ExtensionSpec::RandomCoboundary };
    let aux = AuxSpec::Random(rng.random_range(1..=2));
    SynthParams { name: format!("{}-seed{seed}", group.name()), group: group.clone(), places, cl, extension, aux, seed }
}
