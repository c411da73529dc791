mod common;

use common::*;
use proptest::prelude::*;
use tatelab_core::cohomology::*;
use tatelab_core::gmodule::*;
use tatelab_core::groups::{abelianization, FiniteGroup, Subgroup};
use tatelab_core::lattice::{AbMap, FgAb, IntMatrix};
use tatelab_core::Int;

fn res(grp: &FiniteGroup) -> CompleteResolution {
    CompleteResolution::default_for(grp).unwrap()
}

fn invariants(h: &Cohomology) -> Vec<i64> {
    h.group().invariants().iter().map(|x| x.to_i64().unwrap()).collect()
}

/// All elements of a finite module, as normalized coordinate vectors.
fn elements(m: &GModule) -> Vec<Vec<Int>> {
    m.ab().elements().unwrap()
}

/// `|Z^1| / |B^1|` by enumerating all maps `G → M`.
fn brute_h1_order(m: &GModule) -> usize {
    let grp = m.group();
    let els = elements(m);
    let n = grp.order();
    let total = els.len().pow(n as u32);
    let mut cocycles = 0;
    for code in 0..total {
        let mut c = code;
        let f: Vec<&Vec<Int>> = (0..n)
            .map(|_| {
                let e = &els[c % els.len()];
                c /= els.len();
                e
            })
            .collect();
        let ok = grp.elements().all(|s| {
            grp.elements().all(|t| {
                let rhs: Vec<Int> = f[s].iter().zip(m.act(s, f[t])).map(|(a, b)| a + b).collect();
                m.eq_elems(f[grp.mul(s, t)], &rhs)
            })
        });
        cocycles += ok as usize;
    }
    let mut bnd: Vec<Vec<Vec<Int>>> = els
        .iter()
        .map(|x| grp.elements().map(|s| m.ab().canon(&m.act(s, x).iter().zip(x).map(|(a, b)| a - b).collect::<Vec<_>>())).collect())
        .collect();
    bnd.sort();
    bnd.dedup();
    cocycles / bnd.len()
}

/// `|M^G| / |N M|` by enumeration.
fn brute_h0_order(m: &GModule) -> usize {
    let els = elements(m);
    let fixed = els.iter().filter(|x| m.group().elements().all(|s| m.eq_elems(&m.act(s, x), x))).count();
    let mut norms: Vec<Vec<Int>> = els.iter().map(|x| m.ab().canon(&m.norm(x))).collect();
    norms.sort();
    norms.dedup();
    fixed / norms.len()
}

fn order(h: &Cohomology) -> usize {
    h.group().order().unwrap().to_usize().unwrap()
}

#[test]
fn resolution_shapes() {
    let c1 = g("C1");
    let r = CompleteResolution::new(&c1, -4, 3).unwrap();
    for n in -4..=3 {
        assert_eq!(r.rank(n), 1);
    }
    // over the trivial group differentials alternate between 0 and ±1
    let z = trivial_z(&c1);
    for n in -3..=3 {
        let d = r.tensor_differential(n, &z);
        let v = d[(0, 0)].to_i64().unwrap();
        let expect = if n == 0 || n % 2 == 0 { 1 } else { 0 };
        assert_eq!(v.abs(), expect, "degree {n}");
    }
    let c2 = g("C2");
    let r = CompleteResolution::new(&c2, -1, 2).unwrap();
    assert_eq!((r.rank(0), r.rank(1), r.rank(2)), (1, 2, 4));
    assert!(matches!(CompleteResolution::new(&c2, -6, 2), Err(CohomologyError::WindowTooLarge { .. })));
    assert!(matches!(CompleteResolution::new(&c2, 0, 6), Err(CohomologyError::WindowTooLarge { .. })));
    assert!(matches!(CompleteResolution::new(&c2, 2, 2), Err(CohomologyError::WindowTooLarge { .. })));
    assert!(matches!(CompleteResolution::new(&g("C32"), -5, 5), Err(CohomologyError::WindowTooLarge { .. })));
}

#[test]
fn norm_differential_and_acyclicity() {
    for name in ["C1", "C2", "C3", "C4", "V4", "S3", "Q8"] {
        let grp = g(name);
        let r = res(&grp);
        assert_eq!(r.check_d_squared(), Ok(()), "{name}");
        assert_eq!(r.check_acyclic(), Ok(()), "{name}");
        let reg = regular(&grp);
        let d0 = r.tensor_differential(0, &reg);
        for x in grp.elements() {
            for y in grp.elements() {
                assert_eq!(d0[(x, y)], Int::ONE);
            }
        }
    }
    let c2 = g("C2");
    assert_eq!(CompleteResolution::new(&c2, -5, 5).unwrap().check_acyclic(), Ok(()));
}

#[test]
fn integral_cohomology_of_small_groups() {
    for name in ["C1", "C2", "C3", "C4", "C6", "V4", "S3", "D4", "Q8"] {
        let grp = g(name);
        let r = res(&grp);
        let z = trivial_z(&grp);
        let ab: Vec<i64> = abelianization(&grp).group.invariants().iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(invariants(&cohomology(&r, &z, -2).unwrap()), ab, "{name} H^-2");
        assert!(cohomology(&r, &z, -1).unwrap().group().is_trivial(), "{name} H^-1");
        let h0 = cohomology(&r, &z, 0).unwrap();
        let n = grp.order() as i64;
        assert_eq!(invariants(&h0), if n == 1 { vec![] } else { vec![n] }, "{name} H^0");
        assert!(cohomology(&r, &z, 1).unwrap().group().is_trivial(), "{name} H^1");
        // H^2(G, Z) ≅ Hom(G, Q/Z)
        assert_eq!(invariants(&cohomology(&r, &z, 2).unwrap()), ab, "{name} H^2");
    }
}

#[test]
fn h1_of_c2_with_z2_coefficients() {
    let c2 = g("C2");
    let h = cohomology(&res(&c2), &z_mod(&c2, 2), 1).unwrap();
    assert_eq!(invariants(&h), vec![2]);
}

#[test]
fn low_degrees_match_direct_formulas() {
    for name in ["C2", "C3", "V4", "S3", "C4"] {
        let grp = g(name);
        let r = res(&grp);
        for k in 0..14 {
            let m = if k < 7 { sample_module(&grp, k) } else { sample_finite_module(&grp, k, 2 + (k % 2) as i64) };
            let fnorm = fixed_and_norm(&m).unwrap();
            let hm1 = cohomology(&r, &m, -1).unwrap();
            let h0 = cohomology(&r, &m, 0).unwrap();
            assert!(hm1.group().isomorphic(&fnorm.h1_neg_direct.group), "{name} {k} H^-1");
            assert!(h0.group().isomorphic(&fnorm.h0.group), "{name} {k} H^0");
        }
    }
}

#[test]
fn finite_modules_match_enumeration() {
    for name in ["C2", "C3", "V4"] {
        let grp = g(name);
        let r = res(&grp);
        for k in [0, 2, 4, 6] {
            let m = sample_finite_module(&grp, k, 2);
            if m.ab().order().unwrap() > Int::from(16) {
                continue;
            }
            assert_eq!(order(&cohomology(&r, &m, 1).unwrap()), brute_h1_order(&m), "{name} {k} H^1");
            assert_eq!(order(&cohomology(&r, &m, 0).unwrap()), brute_h0_order(&m), "{name} {k} H^0");
        }
    }
}

#[test]
fn induced_modules_are_acyclic() {
    for name in ["C2", "C3", "V4", "S3"] {
        let grp = g(name);
        let r = res(&grp);
        let reg = regular(&grp);
        let (lo, hi) = r.degree_range();
        for m in [reg.clone(), tensor(&reg, &z_mod(&grp, 2)).unwrap(), tensor(&reg, &aug_ideal(&grp).0).unwrap()] {
            for i in lo..=hi {
                if m.ngens() * r.cochain_rank(i + 1).max(r.cochain_rank(i - 1)) > 2000 {
                    continue;
                }
                assert!(cohomology(&r, &m, i).unwrap().group().is_trivial(), "{name} degree {i}");
            }
        }
    }
}

#[test]
fn cyclic_periodicity() {
    for name in ["C2", "C3", "C4"] {
        let grp = g(name);
        let r = res(&grp);
        for k in 0..10 {
            let m = if k < 7 { sample_module(&grp, k) } else { sample_finite_module(&grp, k, 3) };
            for i in -3..=0 {
                let a = cohomology(&r, &m, i).unwrap();
                let b = cohomology(&r, &m, i + 2).unwrap();
                assert!(a.group().isomorphic(b.group()), "{name} module {k} degree {i}");
            }
        }
    }
}

#[test]
fn functoriality_of_induced_maps() {
    let grp = g("S3");
    let r = res(&grp);
    let (dg, incl) = aug_ideal(&grp);
    let eps = augmentation(&grp);
    for i in [-2, -1, 0, 1] {
        let h_dg = cohomology(&r, &dg, i).unwrap();
        let h_reg = cohomology(&r, &regular(&grp), i).unwrap();
        let h_z = cohomology(&r, &trivial_z(&grp), i).unwrap();
        let f = h_dg.induced_map(&incl, &h_reg).unwrap();
        let g2 = h_reg.induced_map(&eps, &h_z).unwrap();
        let comp = h_dg.induced_map(&incl.then(&eps), &h_z).unwrap();
        assert!(f.then(&g2).equals(&comp));
        assert!(comp.is_zero());
        assert!(h_dg.induced_map(&GMap::identity(&dg), &h_dg).unwrap().equals(&AbMap::identity(h_dg.group())));
    }
}

fn split_extension(a: &GModule, c: &GModule) -> ExtensionData {
    let (b, inj, proj) = GModule::direct_sum(&[a.clone(), c.clone()]).unwrap();
    let _ = b;
    ExtensionData::new(inj[0].clone(), proj[1].clone()).unwrap()
}

#[test]
fn split_extensions_have_zero_connecting_maps() {
    for name in ["C2", "C3", "S3"] {
        let grp = g(name);
        let r = res(&grp);
        let e = split_extension(&aug_ideal(&grp).0, &sample_finite_module(&grp, 3, 2));
        for i in -3..=1 {
            assert!(connecting_hom(&r, &e, i).unwrap().map.is_zero(), "{name} {i}");
        }
    }
}

fn scalar_map(a: &GModule, b: &GModule, k: i64) -> GMap {
    GMap::new(a.clone(), b.clone(), IntMatrix::from_i64_rows(&[vec![k]])).unwrap()
}

#[test]
fn multiplication_by_two_sequence() {
    let c2 = g("C2");
    let r = res(&c2);
    let z = trivial_z(&c2);
    let z2 = z_mod(&c2, 2);
    let e = ExtensionData::new(scalar_map(&z, &z, 2), scalar_map(&z, &z2, 1)).unwrap();
    // H^1(C2, Z) = Hom(C2, Z) = 0, so δ on H^0(Z/2) is zero
    let d0 = connecting_hom(&r, &e, 0).unwrap();
    assert_eq!(invariants(&d0.source), vec![2]);
    assert!(d0.target.group().is_trivial());
    // in degrees 1 and -1 the map Z/2 → Z/2 is injective
    for i in [-1, 1] {
        let d = connecting_hom(&r, &e, i).unwrap();
        assert_eq!(invariants(&d.source), vec![2]);
        assert_eq!(invariants(&d.target), vec![2]);
        assert!(d.map.is_injective(), "degree {i}");
    }
}

#[test]
fn z2_z4_z2_sequence() {
    let c2 = g("C2");
    let r = res(&c2);
    let (z2, z4) = (z_mod(&c2, 2), z_mod(&c2, 4));
    let e = ExtensionData::new(scalar_map(&z2, &z4, 2), scalar_map(&z4, &z2, 1)).unwrap();
    let d = connecting_hom(&r, &e, -1).unwrap();
    assert_eq!(d.source.group().order(), Some(Int::from(2)));
    assert!(!d.map.is_zero());
    // enumeration: the nonzero class of Z/2 = ker N lifts to 1 ∈ Z/4, whose norm 2 is ι(1)
    let z = d.source.rep_of(&ints(&[1]));
    let image = d.chase(&z, None);
    assert_eq!(z4.ab().canon(&scalar_map(&z2, &z4, 2).apply(&image)), z4.ab().canon(&ints(&[2])));
}

/// Exactness of the long exact sequence around degree `i`.
fn check_long_exact(r: &CompleteResolution, e: &ExtensionData, i: i32) {
    let ha = cohomology(r, e.sub(), i).unwrap();
    let hb = cohomology(r, e.middle(), i).unwrap();
    let hc = cohomology(r, e.quotient(), i).unwrap();
    let ha1 = cohomology(r, e.sub(), i + 1).unwrap();
    let hb1 = cohomology(r, e.middle(), i + 1).unwrap();
    let f = ha.induced_map(&e.iota, &hb).unwrap();
    let p = hb.induced_map(&e.pi, &hc).unwrap();
    let d = connecting_hom(r, e, i).unwrap();
    let f1 = ha1.induced_map(&e.iota, &hb1).unwrap();
    for (x, y) in [(&f, &p), (&p, &d.map), (&d.map, &f1)] {
        let h = tatelab_core::lattice::homology_at(x, y).unwrap();
        assert!(h.group.is_trivial(), "not exact in degree {i}");
    }
}

#[test]
fn long_exact_sequences() {
    for name in ["C2", "C3", "V4", "S3"] {
        let grp = g(name);
        let r = res(&grp);
        check_long_exact(&r, &aug_tensor_sequence(&z_mod(&grp, 2)).unwrap(), -2);
        check_long_exact(&r, &aug_tensor_sequence(&trivial_z(&grp)).unwrap(), -1);
        let z = trivial_z(&grp);
        let e = ExtensionData::new(scalar_map(&z, &z, 3), scalar_map(&z, &z_mod(&grp, 3), 1)).unwrap();
        for i in -2..=1 {
            check_long_exact(&r, &e, i);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn connecting_hom_is_lift_independent(k in 0usize..40, seed in proptest::collection::vec(-5i64..=5, 64), i in -2i32..=1) {
        let names = ["C2", "C3", "V4", "S3"];
        let grp = g(names[k % 4]);
        let r = res(&grp);
        let e = aug_tensor_sequence(&sample_finite_module(&grp, k / 4, 2 + (k % 3) as i64)).unwrap();
        prop_assume!(e.middle().ngens() * r.cochain_rank(i + 2) <= 2500);
        let d = connecting_hom(&r, &e, i).unwrap();
        let len = r.cochain_rank(i) * e.sub().ngens();
        let pert: Vec<Int> = (0..len).map(|j| Int::from(seed[j % seed.len()] * (j as i64 % 3 - 1))).collect();
        let n = d.source.group().canon_len();
        let mut probes: Vec<Vec<Int>> = (0..n).map(|j| tatelab_core::lattice::matrix::unit(n, j)).collect();
        probes.push(vec![Int::ONE; n]);
        for h in probes {
            let z = d.source.rep_of(&h);
            let a = d.target.class_of(&d.chase(&z, None)).unwrap();
            let b = d.target.class_of(&d.chase(&z, Some(&pert))).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(&a, &d.apply(&h));
        }
    }
}

#[test]
fn shapiro_examples() {
    let c1 = g("C1");
    let s = shapiro_hminus2(&res(&c1), &c1, &Subgroup::whole(&c1)).unwrap();
    assert!(s.hab.is_trivial() && s.target.group().is_trivial() && s.is_isomorphism());

    let c2 = g("C2");
    let s = shapiro_hminus2(&res(&c2), &c2, &Subgroup::whole(&c2)).unwrap();
    assert_eq!(invariants(&s.target), vec![2]);
    assert!(s.is_isomorphism());

    let s3 = g("S3");
    let c3 = Subgroup::generated(&s3, &[s3.elements().find(|&x| s3.element_order(x) == 3).unwrap()]);
    let s = shapiro_hminus2(&res(&s3), &s3, &c3).unwrap();
    assert_eq!(invariants(&s.target), vec![3]);
    assert!(s.is_isomorphism());
    let els = s.hab.canonical_elements().unwrap();
    let mut imgs: Vec<Vec<Int>> = els.iter().map(|x| s.target.group().reduce_canon(&s.map.apply(x))).collect();
    imgs.sort();
    imgs.dedup();
    assert_eq!(imgs.len(), 3);
}

#[test]
fn shapiro_all_subgroups() {
    for name in ["C4", "V4", "S3", "D4", "Q8"] {
        let grp = g(name);
        let r = res(&grp);
        for h in grp.small_subgroups() {
            let s = shapiro_hminus2(&r, &grp, &h).unwrap();
            assert!(s.is_isomorphism(), "{name} subgroup of order {}", h.order());
        }
    }
}

fn hom_zz2_cocycle(c2: &FiniteGroup, nonzero: bool) -> (GModule, GModule, Cocycle1) {
    let c = trivial_z(c2);
    let a = z_mod(c2, 2);
    let h = hom(&c, &a).unwrap();
    let v = if nonzero { 1 } else { 0 };
    let f = Cocycle1::new(&h, vec![ints(&[0]), ints(&[v])]).unwrap();
    (c, a, f)
}

#[test]
fn cocycle_extension_examples() {
    let c2 = g("C2");
    let r = res(&c2);
    let (c, a, f0) = hom_zz2_cocycle(&c2, false);
    let e0 = cocycle_to_extension(&c, &a, &f0).unwrap();
    assert_eq!(e0.ext.middle().action(1), &IntMatrix::identity(2));
    let (back, _) = extension_to_cocycle(&split_extension(&a, &c)).unwrap();
    assert!(back.class(&r).unwrap().is_zero());

    let (c, a, f) = hom_zz2_cocycle(&c2, true);
    let e = cocycle_to_extension(&c, &a, &f).unwrap();
    e.ext.middle().verify_axioms().unwrap();
    // σ(a, c) = (a + c, c)
    assert_eq!(e.ext.middle().action(1), &IntMatrix::from_i64_rows(&[vec![1, 1], vec![0, 1]]));
    let (back, _) = extension_to_cocycle(&e.ext).unwrap();
    assert!(back.class(&r).unwrap().same_class(&f.class(&r).unwrap()));
    assert!(!f.class(&r).unwrap().is_zero());
    assert!(Cocycle1::new(f.module(), vec![ints(&[1]), ints(&[0])]).is_err());
}

/// A random 1-cocycle valued in `m`: class representative plus a coboundary.
fn random_cocycle(r: &CompleteResolution, m: &GModule, coords: &[i64], shift: &[i64]) -> Cocycle1 {
    let h = cohomology(r, m, 1).unwrap();
    let k = h.group().canon_len();
    let c: Vec<Int> = (0..k).map(|j| Int::from(coords[j % coords.len()])).collect();
    let z = h.rep_of(&c);
    let x: Vec<Int> = (0..m.ngens()).map(|j| Int::from(shift[j % shift.len()])).collect();
    let b = Cocycle1::coboundary(m, &x).to_cochain();
    let sum: Vec<Int> = z.iter().zip(&b).map(|(p, q)| p + q).collect();
    Cocycle1::from_cochain(m, &sum).unwrap()
}

fn sample_pair(grp: &FiniteGroup, k: usize) -> (GModule, GModule) {
    let c = match k % 3 {
        0 => trivial_z(grp),
        1 => aug_ideal(grp).0,
        _ => regular(grp),
    };
    let a = if k % 2 == 0 { sample_finite_module(grp, k / 3, 2) } else { z_mod(grp, 3 + (k % 4) as i64) };
    (c, a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn cocycle_extension_roundtrip(k in 0usize..30, coords in proptest::collection::vec(-3i64..=3, 4), shift in proptest::collection::vec(-3i64..=3, 8)) {
        let names = ["C2", "C3", "V4"];
        let grp = g(names[k % 3]);
        let r = res(&grp);
        let (c, a) = sample_pair(&grp, k / 3);
        let h = hom(&c, &a).unwrap();
        let f = random_cocycle(&r, &h, &coords, &shift);
        let e = cocycle_to_extension(&c, &a, &f).unwrap();
        let (back, _) = extension_to_cocycle(&e.ext).unwrap();
        prop_assert!(back.class(&r).unwrap().same_class(&f.class(&r).unwrap()));
        prop_assert!(extension_equivalence(&e.ext).unwrap().ab.is_isomorphism());
    }
}

#[test]
fn ext1_aug_to_h2_examples() {
    let c2 = g("C2");
    let r = res(&c2);
    let z = trivial_z(&c2);
    let d = ext1_aug_map(&r, &z).unwrap();
    assert_eq!(invariants(&d.target), vec![2]);
    assert!(d.map.is_surjective() && d.map.is_isomorphism());
    let hd = d.source.module().clone();
    let zero = Cocycle1::zero(&hd);
    assert!(ext1_aug_to_h2(&r, &z, &zero).unwrap().is_zero());
    let cob = Cocycle1::coboundary(&hd, &ints(&[5]));
    assert!(ext1_aug_to_h2(&r, &z, &cob).unwrap().is_zero());
    let gen = Cocycle1::from_cochain(&hd, &d.source.rep_of(&ints(&[1]))).unwrap();
    assert!(!ext1_aug_to_h2(&r, &z, &gen).unwrap().is_zero());
}

#[test]
fn ext1_aug_orders_for_finite_modules() {
    for name in ["C2", "C3", "V4"] {
        let grp = g(name);
        let r = res(&grp);
        for k in 0..7 {
            let a = sample_finite_module(&grp, k, 2 + (k % 2) as i64);
            let d = ext1_aug_map(&r, &a).unwrap();
            let direct = cohomology(&r, &a, 2).unwrap();
            assert_eq!(d.source.group().order(), direct.group().order(), "{name} {k}");
            assert!(d.map.is_isomorphism(), "{name} {k}");
        }
    }
}

#[test]
fn cup_product_small_example() {
    let c2 = g("C2");
    let r = res(&c2);
    let z = trivial_z(&c2);
    let a = z_mod(&c2, 2);
    let h1 = cohomology(&r, &a, 1).unwrap();
    let xi = h1.class_from_coords(&ints(&[1]));
    let hm2 = cohomology(&r, &z, -2).unwrap();
    let gen = hm2.class_from_coords(&ints(&[1]));
    let out = cup_with_h1(&r, &xi, &gen).unwrap();
    assert_eq!(out.degree(), -1);
    assert_eq!(invariants(out.cohomology()), vec![2]);
    assert!(!out.is_zero());
    assert!(cup_with_h1(&r, &h1.zero_class(), &gen).unwrap().is_zero());
    assert!(matches!(cup_with_h1(&r, &gen, &xi), Err(CohomologyError::DegreeMismatch)));
}

/// `ξ ∪ [τ]⊗1` is the class of `g(τ)` in `H^{-1}(A)` for trivial `C = Z`.
#[test]
fn cup_with_integral_classes() {
    for name in ["C2", "C3", "V4", "S3"] {
        let grp = g(name);
        let r = res(&grp);
        let z = trivial_z(&grp);
        for k in 0..5 {
            let a = sample_finite_module(&grp, k, 2 + (k % 2) as i64);
            let xi = random_cocycle(&r, &a, &[1, 2, -1], &[k as i64, 1]).class(&r).unwrap();
            let cup = CupWithH1::new(&r, &z, &xi).unwrap();
            let za = cup.target.module().clone();
            let na = a.ngens();
            for t in grp.elements() {
                let zc = cup.source.class(&bar_chain(&r, &z, &[t], &ints(&[1]))).unwrap();
                let out = cup.apply(&zc).unwrap();
                let expected = cup.target.class(&tensor_element(&ints(&[1]), &xi.rep()[t * na..(t + 1) * na])).unwrap();
                assert!(out.same_class(&expected), "{name} {k} τ={t}");
                let _ = &za;
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    /// The connecting map of the extension attached to `ξ` is cup product with `ξ` followed by evaluation.
    #[test]
    fn connecting_map_is_cup_then_evaluation(k in 0usize..60, coords in proptest::collection::vec(-2i64..=2, 4), shift in proptest::collection::vec(-2i64..=2, 6)) {
        let names = ["C2", "C3", "V4", "S3"];
        let grp = g(names[k % 4]);
        let r = res(&grp);
        let (c, a) = sample_pair(&grp, k / 4);
        prop_assume!(c.ngens() * c.ngens() * a.ngens() * grp.order() <= 400);
        let h = hom(&c, &a).unwrap();
        let f = random_cocycle(&r, &h, &coords, &shift);
        let xi = f.class(&r).unwrap();
        let e = cocycle_to_extension(&c, &a, &f).unwrap();
        let delta = connecting_hom(&r, &e.ext, -2).unwrap();
        let cup = CupWithH1::new(&r, &c, &xi).unwrap();
        let hm1a = cohomology(&r, &a, -1).unwrap();
        let ev = cup.target.induced_map(&evaluation(&c, &a).unwrap(), &hm1a).unwrap();
        let via_cup = cup.map.then(&ev);
        prop_assert!(via_cup.equals(&delta.map));
    }
}

#[test]
fn cohomology_classes_behave_like_group_elements() {
    let grp = g("C4");
    let r = res(&grp);
    let z = trivial_z(&grp);
    let h0 = cohomology(&r, &z, 0).unwrap();
    let one = h0.class_from_coords(&ints(&[1]));
    assert!(one.scale(&Int::from(4)).is_zero());
    assert!(!one.scale(&Int::from(2)).is_zero());
    assert!(one.add(&one.neg()).is_zero());
    assert!(h0.class(&ints(&[4])).unwrap().is_zero());
    assert!(is_coboundary(&r, &z, 0, &ints(&[8])));
    assert!(!is_coboundary(&r, &z, 0, &ints(&[2])));
    let _ = FgAb::trivial();
}
