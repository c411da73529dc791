mod common;

use common::*;
use proptest::prelude::*;
use tatelab_core::cft::*;
use tatelab_core::groups::{normal_closure, FiniteGroup, Subgroup};
use tatelab_core::Int;

fn usizes(v: &[Int]) -> Vec<usize> {
    v.iter().map(|x| x.to_usize().unwrap()).collect()
}

#[test]
fn worked_instances_are_valid() {
    for inst in [i2_twist(), i2_plain()] {
        let r = inst.validate();
        assert!(r.is_clean(), "{:?}", r.violations);
        assert_eq!(inst.gs.order(), 4);
        assert_eq!(inst.cl_orders, vec![2]);
    }
}

#[test]
fn zero_frobenius_violates_condition_ii() {
    let mut inst = i2_twist();
    inst.aux[0].frobenius = ints(&[0]);
    assert!(inst.validate().has("ConditionII"));
}

#[test]
fn non_multiplicative_section_is_reported() {
    let mut inst = i2_twist();
    assert_eq!(inst.places[1].subgroup.elements()[0], inst.group.identity());
    inst.places[1].iota[0] = inst.places[1].iota[1];
    let r = inst.validate();
    assert!(r.has("IotaNotHomomorphism") || r.has("IotaNotSection"), "{:?}", r.violations);
}

#[test]
fn c_p_on_worked_instances() {
    let t = i2_twist();
    let p = i2_plain();
    let sigma = 1;
    assert_eq!(c_p(&t, 1, sigma).unwrap(), ints(&[1]));
    assert_eq!(c_p(&p, 1, sigma).unwrap(), ints(&[0]));
    assert_eq!(c_p(&t, 1, 0).unwrap(), ints(&[0]));
    assert_eq!(c_p(&t, 0, sigma), Err(CftError::PlaceIsP0(0)));
}

#[test]
fn norm_model_on_worked_instances() {
    let t = norm_model(&i2_twist());
    assert_eq!(t.q.order(), Some(Int::ONE));
    let p = norm_model(&i2_plain());
    assert_eq!(p.q.order(), Some(Int::from(2)));
    assert!(p.nm.ab.is_isomorphism());
}

#[test]
fn trivial_group_norm_is_isomorphism() {
    let g1 = FiniteGroup::trivial();
    let params = SynthParams {
        name: "trivial".into(),
        group: g1.clone(),
        places: vec![(Subgroup::whole(&g1), Twist::None)],
        cl: vec![ClPiece::Trivial(3)],
        extension: ExtensionSpec::Split,
        aux: AuxSpec::Random(1),
        seed: 1,
    };
    let inst = synth_instance(&params).unwrap();
    assert!(inst.validate().is_clean());
    let nm = norm_model(&inst);
    assert_eq!(nm.q.order(), Some(Int::from(3)));
    assert!(nm.nm.ab.is_isomorphism());
}

#[test]
fn xy_ranks() {
    let inst = i2_twist();
    let xy = xy_modules(&inst);
    assert_eq!(xy.y.ngens(), 2);
    assert_eq!(xy.x.ngens(), 1);
    assert!(xy.incl.verify_equivariance().is_ok());
    assert!(xy.incl.then(&xy.aug).is_zero());
    let c4 = g("C4");
    let subs = c4.small_subgroups();
    let params = SynthParams {
        name: "c4".into(),
        group: c4.clone(),
        places: vec![(subs[1].clone(), Twist::None), (subs[0].clone(), Twist::None)],
        cl: vec![ClPiece::Trivial(2)],
        extension: ExtensionSpec::Split,
        aux: AuxSpec::Random(1),
        seed: 3,
    };
    let inst = synth_instance(&params).unwrap();
    let xy = xy_modules(&inst);
    assert_eq!(xy.y.ngens(), 1 + 2 + 4);
    assert_eq!(xy.x.ngens(), 6);
    assert!(xy.x.verify_axioms().is_ok());
    assert!(xy.incl.verify_equivariance().is_ok());
}

/// `Q` recomputed as `G^S` modulo the normal closure of commutators and section images.
fn brute_q_order(inst: &Instance) -> usize {
    let gs = &inst.gs;
    let mut gens: Vec<usize> = Vec::new();
    for a in gs.elements() {
        for b in gs.elements() {
            gens.push(gs.commutator(a, b));
        }
    }
    for p in &inst.places {
        gens.extend(p.iota.iter().copied());
    }
    gens.sort();
    gens.dedup();
    gs.order() / normal_closure(gs, &gens).order()
}

fn campaign_instance(name: &str, seed: u64) -> Option<Instance> {
    let grp = g(name);
    (0..8).find_map(|k| synth_instance(&campaign_params(&grp, seed.wrapping_mul(31).wrapping_add(k))).ok())
}

#[test]
fn campaign_instances_validate_and_match_brute_force_q() {
    for name in ["C2", "C3", "C4", "V4", "S3"] {
        for seed in 0..4 {
            let inst = campaign_instance(name, seed).unwrap_or_else(|| panic!("{name} seed {seed}"));
            let r = inst.validate();
            assert!(r.is_clean(), "{name} {seed}: {:?}", r.violations);
            let nm = norm_model(&inst);
            assert_eq!(nm.q.order().and_then(|o| o.to_usize()), Some(brute_q_order(&inst)), "{name} {seed}");
            assert!(nm.nm.verify_equivariance().is_ok());
        }
    }
}

#[test]
fn synth_is_deterministic() {
    let p = campaign_params(&g("S3"), 11);
    let a = synth_instance(&p).map(|i| i.to_file().to_json());
    let b = synth_instance(&p).map(|i| i.to_file().to_json());
    assert_eq!(a, b);
}

#[test]
fn oversized_params_are_unsatisfiable() {
    let grp = g("C2");
    let params = SynthParams {
        name: "big".into(),
        group: grp.clone(),
        places: vec![],
        cl: vec![ClPiece::Trivial(9), ClPiece::Trivial(9)],
        extension: ExtensionSpec::Split,
        aux: AuxSpec::Random(1),
        seed: 0,
    };
    assert!(matches!(synth_instance(&params), Err(CftError::UnsatisfiableParams(_))));
}

#[test]
fn non_split_extension_is_unsatisfiable() {
    // Z/4 as the extension of C2 by Z/2.
    let grp = g("C2");
    let c = vec![vec![ints(&[0]), ints(&[0])], vec![ints(&[0]), ints(&[1])]];
    let params = SynthParams {
        name: "nonsplit".into(),
        group: grp,
        places: vec![],
        cl: vec![ClPiece::Trivial(2)],
        extension: ExtensionSpec::Cocycle(c),
        aux: AuxSpec::Random(1),
        seed: 0,
    };
    assert!(matches!(synth_instance(&params), Err(CftError::UnsatisfiableParams(_))));
}

#[test]
fn json_round_trip() {
    for inst in [i2_twist(), i2_plain(), campaign_instance("D4", 2).unwrap()] {
        let text = inst.to_file().to_json();
        let file = InstanceFile::from_json(&text).unwrap();
        assert!(validate_instance(&file).is_clean());
        let back = Instance::from_file(&file).unwrap();
        assert_eq!(back.to_file().to_json(), text);
    }
}

#[test]
fn json_rejects_unknown_fields_and_versions() {
    let text = i2_twist().to_file().to_json();
    let extra = text.replacen('{', "{\"bogus\": 1,", 1);
    assert!(InstanceFile::from_json(&extra).is_err());
    let bumped = text.replace("\"schema_version\": 1", "\"schema_version\": 99");
    assert!(InstanceFile::from_json(&bumped).is_err());
}

#[test]
fn malformed_group_table_is_reported() {
    let mut file = i2_twist().to_file();
    file.group[1][1] = 1;
    let r = validate_instance(&file);
    assert!(r.has("NotAGroup"), "{:?}", r.violations);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// `c_p(στ) = τ⁻¹·c_p(σ) + c_p(τ)`.
    #[test]
    fn c_p_is_twisted_cocycle(gi in 0usize..5, seed in 0u64..200) {
        let name = ["C2", "C3", "C4", "V4", "S3"][gi];
        let inst = campaign_instance(name, seed).unwrap();
        let p0 = inst.p0();
        for p in 0..inst.places.len() {
            if p == p0 { continue; }
            let h = inst.places[p].subgroup.elements().to_vec();
            for &s in &h {
                for &t in &h {
                    let st = inst.group.mul(s, t);
                    let lhs = c_p(&inst, p, st).unwrap();
                    // ι0(st)⁻¹ιp(st) = ι0(t)⁻¹ [ι0(s)⁻¹ιp(s)] ι0(t) · ι0(t)⁻¹ιp(t)
                    let cs = c_p(&inst, p, s).unwrap();
                    let ct = c_p(&inst, p, t).unwrap();
                    let tinv = inst.group.inv(t);
                    let rhs: Vec<Int> = inst.cl_act(tinv, &cs).iter().zip(&ct).map(|(a, b)| a + b).collect();
                    prop_assert_eq!(inst.cl_reduce(&lhs), inst.cl_reduce(&rhs));
                }
            }
        }
    }

    #[test]
    fn extend_hom_agrees_with_multiplication(gi in 0usize..4, a in 0usize..8, b in 0usize..8) {
        let grp = g(["C4", "V4", "S3", "D4"][gi]);
        let (a, b) = (a % grp.order(), b % grp.order());
        let f = extend_hom(&grp, &[a, b], &grp, &[a, b]).unwrap();
        let h = Subgroup::generated(&grp, &[a, b]);
        for x in grp.elements() {
            prop_assert_eq!(f[x], if h.contains(x) { Some(x) } else { None });
        }
    }

    #[test]
    fn cl_indexing_round_trips(gi in 0usize..5, seed in 0u64..50) {
        let inst = campaign_instance(["C2", "C3", "C4", "V4", "S3"][gi], seed).unwrap();
        for i in 0..inst.cl_size() {
            prop_assert_eq!(inst.cl_index(&inst.cl_element(i)), i);
            prop_assert_eq!(usizes(&inst.kappa_inv(inst.kappa[i]).unwrap()), usizes(&inst.cl_element(i)));
        }
    }
}
