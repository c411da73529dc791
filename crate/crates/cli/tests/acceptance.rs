//! Acceptance suite: one line per criterion, exact arithmetic throughout.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use tatelab_cli::{analyze, campaign_instance, CheckGroup, Record, DEFAULT_GROUPS};
use tatelab_core::cft::{i2_plain, i2_twist, norm_model, Instance, InstanceFile};
use tatelab_core::cohomology::*;
use tatelab_core::gmodule::*;
use tatelab_core::groups::{abelianization, FiniteGroup};
use tatelab_core::lab::{
    build_nabla, delta1, delta1_invariance, delta_minus2, fixture_unit_check, subgroups_cdc, Fixture, Lab, LAB_WINDOW,
};
use tatelab_core::lattice::FgAb;
use tatelab_core::Int;

/// Exact equality everywhere; no numerical tolerance applies.
const TOLERANCE: &str = "exact";
const SEEDS_PER_GROUP: u64 = 15;
const MODULES_PER_GROUP: usize = 50;
const BUDGET_RESOLUTION: Duration = Duration::from_secs(120);
const BUDGET_CAMPAIGN: Duration = Duration::from_secs(600);

/// Criteria whose failure is a documented disagreement with the stated closed form, not a defect.
const DOCUMENTED: &[(u32, &str)] = &[(
    5,
    "literal form tau*c_p(h) differs from the computed snake value by -tau(h-1)c_p(h), an element of D(Cl); \
     the computed value is tau*h*c_p(h)",
)];

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn group(name: &str) -> FiniteGroup {
    FiniteGroup::named(name).expect("known group")
}

fn int(v: i64) -> Int {
    Int::from(v)
}

fn order(h: &Cohomology) -> Option<Int> {
    h.group().order()
}

/// A random finite module: a lattice from the standard list, or a sum of two, reduced mod `m`.
fn random_finite_module(g: &FiniteGroup, rng: &mut ChaCha8Rng) -> GModule {
    let subs = g.small_subgroups();
    let lattice = |rng: &mut ChaCha8Rng| -> GModule {
        let h = subs.choose(rng).expect("subgroups");
        let m = match rng.random_range(0..5) {
            0 => trivial_z(g),
            1 => regular(g),
            2 => aug_ideal(g).0,
            3 => induced(g, h),
            _ => local_aug_ideal(g, h).0,
        };
        if m.ngens() == 0 {
            trivial_z(g)
        } else {
            m
        }
    };
    let base = lattice(rng);
    let base = if rng.random_bool(0.3) && base.ngens() <= 4 {
        let other = lattice(rng);
        GModule::direct_sum(&[base, other]).expect("same group").0
    } else {
        base
    };
    let m = *[2i64, 3, 4, 5, 6].choose(rng).expect("moduli");
    tensor(&base, &GModule::trivial(g, FgAb::cyclic(m))).expect("tensor")
}

fn random_cocycle(res: &CompleteResolution, m: &GModule, rng: &mut ChaCha8Rng) -> Cocycle1 {
    let h = cohomology(res, m, 1).expect("H^1");
    let c: Vec<Int> = (0..h.group().canon_len()).map(|_| int(rng.random_range(-3..=3))).collect();
    let z = h.rep_of(&c);
    let x: Vec<Int> = (0..m.ngens()).map(|_| int(rng.random_range(-3..=3))).collect();
    let b = Cocycle1::coboundary(m, &x).to_cochain();
    let sum: Vec<Int> = z.iter().zip(&b).map(|(p, q)| p + q).collect();
    Cocycle1::from_cochain(m, &sum).expect("cocycle")
}

fn criterion_1() -> (bool, String) {
    let mut failures = Vec::new();
    let mut modules = 0;
    for name in DEFAULT_GROUPS {
        let g = group(name);
        let wide = CompleteResolution::new(&g, -4, 3).expect("window [-4, 3]");
        if let Err(n) = wide.check_acyclic() {
            failures.push(format!("{name}: not acyclic at {n}"));
        }
        let res = CompleteResolution::new(&g, -2, 1).expect("window [-2, 1]");
        let mut rng = ChaCha8Rng::seed_from_u64(0xac1 ^ g.order() as u64 ^ ((name.as_bytes()[0] as u64) << 8));
        for k in 0..MODULES_PER_GROUP {
            let m = random_finite_module(&g, &mut rng);
            let direct = fixed_and_norm(&m).expect("direct formulas");
            let hm1 = cohomology(&res, &m, -1).expect("H^-1");
            let h0 = cohomology(&res, &m, 0).expect("H^0");
            modules += 1;
            if !hm1.group().isomorphic(&direct.h1_neg_direct.group) || !h0.group().isomorphic(&direct.h0.group) {
                failures.push(format!("{name} module {k}"));
            }
        }
    }
    (failures.is_empty(), format!("7 groups acyclic on [-4,3]; {modules} random finite modules; failures {failures:?}"))
}

fn criterion_2() -> (bool, String) {
    let mut failures = Vec::new();
    for name in DEFAULT_GROUPS {
        let g = group(name);
        let res = CompleteResolution::default_for(&g).expect("default window");
        let z = trivial_z(&g);
        let ab = abelianization(&g).group.invariants();
        if cohomology(&res, &z, -2).unwrap().group().invariants() != ab {
            failures.push(format!("{name} H^-2"));
        }
        if !cohomology(&res, &z, -1).unwrap().group().is_trivial() {
            failures.push(format!("{name} H^-1"));
        }
        if cohomology(&res, &z, 0).unwrap().group().invariants() != vec![int(g.order() as i64)] {
            failures.push(format!("{name} H^0"));
        }
    }
    let mut periodic = 0;
    for name in ["C2", "C3", "C4"] {
        let g = group(name);
        let res = CompleteResolution::default_for(&g).unwrap();
        let (lo, hi) = res.degree_range();
        let mut rng = ChaCha8Rng::seed_from_u64(0xc2c + g.order() as u64);
        let mut modules = vec![trivial_z(&g), aug_ideal(&g).0, GModule::trivial(&g, FgAb::cyclic(6))];
        modules.extend((0..3).map(|_| random_finite_module(&g, &mut rng)));
        for (k, m) in modules.iter().enumerate() {
            for i in lo..=hi - 2 {
                let a = cohomology(&res, m, i).unwrap();
                let b = cohomology(&res, m, i + 2).unwrap();
                periodic += 1;
                if a.group().invariants() != b.group().invariants() {
                    failures.push(format!("{name} module {k} degree {i}"));
                }
            }
        }
    }
    (failures.is_empty(), format!("standard values on 7 groups; {periodic} periodicity pairs; failures {failures:?}"))
}

fn criterion_3() -> (bool, String) {
    let mut failures = Vec::new();
    let mut shapiro = 0;
    for name in DEFAULT_GROUPS {
        let g = group(name);
        let res = CompleteResolution::default_for(&g).unwrap();
        for h in g.small_subgroups() {
            shapiro += 1;
            if !shapiro_hminus2(&res, &g, &h).unwrap().is_isomorphism() {
                failures.push(format!("shapiro {name} |H|={}", h.order()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x3e7);
    let (mut roundtrips, mut cups, mut ext1) = (0, 0, 0);
    let names = ["C2", "C3", "V4", "S3"];
    while roundtrips < 50 || cups < 25 {
        let g = group(names.choose(&mut rng).unwrap());
        let res = CompleteResolution::default_for(&g).unwrap();
        let c = match rng.random_range(0..3) {
            0 => trivial_z(&g),
            1 => aug_ideal(&g).0,
            _ => regular(&g),
        };
        let a = if rng.random_bool(0.5) {
            GModule::trivial(&g, FgAb::cyclic(rng.random_range(2..=5)))
        } else {
            random_finite_module(&g, &mut rng)
        };
        if c.ngens() * c.ngens() * a.ngens() * g.order() > 400 {
            continue;
        }
        let h = hom(&c, &a).unwrap();
        let f = random_cocycle(&res, &h, &mut rng);
        let e = cocycle_to_extension(&c, &a, &f).unwrap();
        let (back, _) = extension_to_cocycle(&e.ext).unwrap();
        roundtrips += 1;
        if !back.class(&res).unwrap().same_class(&f.class(&res).unwrap()) {
            failures.push(format!("roundtrip {} case {roundtrips}", g.name()));
        }
        if cups < 25 {
            let xi = f.class(&res).unwrap();
            let delta = connecting_hom(&res, &e.ext, -2).unwrap();
            let cup = CupWithH1::new(&res, &c, &xi).unwrap();
            let hm1a = cohomology(&res, &a, -1).unwrap();
            let ev = cup.target.induced_map(&evaluation(&c, &a).unwrap(), &hm1a).unwrap();
            cups += 1;
            if !cup.map.then(&ev).equals(&delta.map) {
                failures.push(format!("cup {} case {cups}", g.name()));
            }
        }
    }
    for name in names {
        let g = group(name);
        let res = CompleteResolution::default_for(&g).unwrap();
        for _ in 0..5 {
            let a = random_finite_module(&g, &mut rng);
            if a.ngens() > 6 {
                continue;
            }
            let d = ext1_aug_map(&res, &a).unwrap();
            ext1 += 1;
            if d.source.group().order() != order(&cohomology(&res, &a, 2).unwrap()) {
                failures.push(format!("ext1 {name}"));
            }
        }
    }
    (
        failures.is_empty() && shapiro >= 10 && ext1 > 0,
        format!("{shapiro} Shapiro pairs, {roundtrips} roundtrips, {cups} cup identities, {ext1} Ext^1 orders; failures {failures:?}"),
    )
}

struct Campaign {
    instances: Vec<(String, Vec<Record>)>,
    unsatisfiable: usize,
}

impl Campaign {
    fn run() -> Campaign {
        let jobs: Vec<(&str, u64)> = DEFAULT_GROUPS.iter().flat_map(|&g| (0..SEEDS_PER_GROUP).map(move |s| (g, s))).collect();
        let groups: Vec<CheckGroup> = CheckGroup::ALL.into_iter().filter(|g| *g != CheckGroup::Fixture).collect();
        let results: Vec<Option<(String, Vec<Record>)>> = jobs
            .par_iter()
            .map(|&(g, s)| {
                let inst = campaign_instance(&group(g), s).ok()?;
                let records = analyze(&inst, &groups, LAB_WINDOW, None).expect("pipelines complete");
                Some((inst.name.clone(), records))
            })
            .collect();
        let unsatisfiable = results.iter().filter(|r| r.is_none()).count();
        let mut instances: Vec<(String, Vec<Record>)> = results.into_iter().flatten().collect();
        for inst in [i2_twist(), i2_plain()] {
            instances.push((inst.name.clone(), analyze(&inst, &groups, LAB_WINDOW, None).expect("worked instance")));
        }
        Campaign { instances, unsatisfiable }
    }

    /// Per check id: (passes, failing instances).
    fn tally(&self, prefix: &str) -> (usize, Vec<String>) {
        let mut pass = 0;
        let mut fail = Vec::new();
        for (name, records) in &self.instances {
            for r in records.iter().filter(|r| r.id.starts_with(prefix)) {
                if r.pass {
                    pass += 1;
                } else {
                    fail.push(format!("{name}:{}", r.id));
                }
            }
        }
        (pass, fail)
    }

    fn all_pass(&self, prefixes: &[&str]) -> (bool, String) {
        let mut ok = true;
        let mut parts = Vec::new();
        for p in prefixes {
            let (pass, fail) = self.tally(p);
            ok &= fail.is_empty() && pass > 0;
            parts.push(format!("{p} {pass}/{}", pass + fail.len()));
            if !fail.is_empty() {
                parts.push(format!("failing {fail:?}"));
            }
        }
        (ok, parts.join(", "))
    }
}

fn criterion_4(c: &Campaign) -> (bool, String) {
    let synthetic = c.instances.len() - 2;
    let (ok, detail) = c.all_pass(&["delta_minus2.agreement"]);
    let inst = i2_twist();
    let lab = Lab::new(&inst).unwrap();
    let nabla = build_nabla(&inst, &lab.xy, &lab.wrb, &lab.snake).unwrap();
    let d = delta_minus2(&inst, &lab.res, &lab.xy, &nabla).unwrap();
    let two = Some(int(2));
    let twist_ok = d.agree()
        && d.delta.source.group().order() == two
        && d.delta.target.group().order() == two
        && !d.delta.map.is_zero();
    let generators: usize = c
        .instances
        .iter()
        .flat_map(|(_, rs)| rs.iter().filter(|r| r.id == "delta_minus2.agreement"))
        .map(|r| r.witness["generators"].as_array().map_or(0, Vec::len))
        .sum();
    (
        ok && twist_ok && synthetic >= 100,
        format!(
            "{synthetic} synthetic + 2 worked instances ({} unsatisfiable seeds), {generators} generators; {detail}; I2-twist nonzero Z/2 -> Z/2: {twist_ok}",
            c.unsatisfiable
        ),
    )
}

fn criterion_5(c: &Campaign) -> (bool, String) {
    let (rest_ok, detail) =
        c.all_pass(&["snake.r_closed_form", "snake.r_literal_mod_d", "snake.q_frobenius", "script_h.embedding_injective"]);
    let (mut elements, mut literal, mut affected) = (0u64, 0u64, 0usize);
    for (_, rs) in &c.instances {
        for r in rs.iter().filter(|r| r.id == "snake.r_closed_form") {
            elements += r.witness["elements"].as_u64().unwrap_or(0);
            let m = r.witness["literal_mismatches"].as_u64().unwrap_or(0);
            literal += m;
            affected += (m > 0) as usize;
        }
    }
    (
        rest_ok && literal == 0,
        format!(
            "literal tau*c_p(h): {literal}/{elements} mismatches on {affected} instances; computed tau*h*c_p(h) and the rest: {detail}"
        ),
    )
}

fn criterion_6(c: &Campaign) -> (bool, String) {
    c.all_pass(&["nabla.class_matches_g", "nabla.exact"])
}

fn criterion_7(c: &Campaign) -> (bool, String) {
    c.all_pass(&["homology.h_minus1_x_zero", "homology.gens_iso"])
}

fn criterion_8(c: &Campaign) -> (bool, String) {
    let (ok, detail) = c.all_pass(&["norm.", "cdc.d_stable"]);
    let hand = |inst: &Instance, q: i64, ker: i64| {
        let nm = norm_model(inst);
        nm.q.order() == Some(int(q)) && nm.nm.ab.kernel().0.order() == Some(int(ker))
    };
    let worked = hand(&i2_twist(), 1, 2) && hand(&i2_plain(), 2, 1);
    (ok && worked, format!("{detail}; I2 hand values (Q = 0 / Z/2, Ker Nm = Z/2 / 0): {worked}"))
}

fn criterion_9() -> (bool, String) {
    let mut pairs = 0;
    let mut failures = Vec::new();
    let mut instances: Vec<Instance> = vec![i2_twist(), i2_plain()];
    for (k, name) in DEFAULT_GROUPS.iter().enumerate() {
        for s in 0..SEEDS_PER_GROUP {
            if let Ok(i) = campaign_instance(&group(name), s + 1000 * k as u64) {
                instances.push(i);
            }
        }
    }
    for (k, inst) in instances.iter().enumerate() {
        let lab = Lab::new(inst).unwrap();
        let d = delta1(&lab).unwrap();
        let cdc = subgroups_cdc(inst, &lab.res).unwrap();
        let check = delta1_invariance(&lab, &d, &cdc, 4, k as u64).unwrap();
        if check.witness["f_rank"].as_u64().unwrap_or(0) > 0 && check.witness["zero_class_rank"].as_u64().unwrap_or(0) > 0 {
            pairs += 4;
        }
        if !check.pass {
            failures.push(inst.name.clone());
        }
    }
    (failures.is_empty() && pairs >= 50, format!("{pairs} randomized (instance, class) pairs; failures {failures:?}"))
}

fn criterion_10() -> (bool, String) {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let file = InstanceFile::from_json(&std::fs::read_to_string(root.join("instances/q_sqrt_minus14.json")).unwrap()).unwrap();
    let inst = Instance::from_file(&file).expect("valid real-field instance");
    let fixture = Fixture::from_json(&std::fs::read_to_string(root.join("fixtures/q_sqrt_minus14.json")).unwrap()).unwrap();
    let lab = Lab::new(&inst).unwrap();
    let checks = fixture_unit_check(&lab, &fixture).unwrap();
    let failing: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.id.as_str()).collect();
    (failing.is_empty(), format!("{}: {} assertions; failing {failing:?}", inst.name, checks.len()))
}

fn criterion_11() -> (bool, String) {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_tatelab"))
            .args(["selftest", "--groups", "C2,C3,C4,V4,S3,D4,Q8", "--seeds", "4"])
            .output()
            .expect("binary runs");
        (out.status.code(), out.stdout)
    };
    let (c1, a) = run();
    let (c2, b) = run();
    (c1 == Some(0) && c2 == Some(0) && a == b && !a.is_empty(), format!("two selftest runs, {} bytes each, identical: {}", a.len(), a == b))
}

fn timed(id: u32, title: &'static str, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let t = Instant::now();
    let (pass, detail) = f();
    Outcome { id, title, pass, detail, elapsed: t.elapsed() }
}

fn main() -> ExitCode {
    let mut outcomes = vec![
        timed(1, "resolution correctness", criterion_1),
        timed(2, "standard values and periodicity", criterion_2),
        timed(3, "cohomological lemma suite", criterion_3),
    ];
    let t = Instant::now();
    let campaign = Campaign::run();
    let campaign_time = t.elapsed();
    outcomes.push(timed(4, "connecting map of the nabla sequence", || criterion_4(&campaign)));
    outcomes.push(timed(5, "snake closed forms", || criterion_5(&campaign)));
    outcomes.push(timed(6, "nabla class", || criterion_6(&campaign)));
    outcomes.push(timed(7, "homology of X", || criterion_7(&campaign)));
    outcomes.push(timed(8, "norm-map corollaries", || criterion_8(&campaign)));
    outcomes.push(timed(9, "delta_1 well-definedness", criterion_9));
    outcomes.push(timed(10, "real-field fixture", criterion_10));
    outcomes.push(timed(11, "determinism", criterion_11));

    let budgets: BTreeMap<u32, Duration> = [(1, BUDGET_RESOLUTION), (4, BUDGET_CAMPAIGN)].into();
    let mut undocumented = 0;
    for o in &mut outcomes {
        let elapsed = if o.id == 4 { o.elapsed + campaign_time } else { o.elapsed };
        if let Some(&b) = budgets.get(&o.id) {
            if elapsed > b {
                o.pass = false;
                o.detail += &format!("; over budget {b:?}");
            }
        }
        let note = DOCUMENTED.iter().find(|(id, _)| *id == o.id && !o.pass).map(|(_, n)| *n);
        let status = match (o.pass, note) {
            (true, _) => "PASS",
            (false, Some(_)) => "FAIL (documented)",
            (false, None) => "FAIL",
        };
        println!("[{status}] criterion {:>2} {} | tol {TOLERANCE} | {:.1}s | {}", o.id, o.title, elapsed.as_secs_f64(), o.detail);
        if let Some(n) = note {
            println!("        note: {n}");
        }
        undocumented += (!o.pass && note.is_none()) as usize;
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("acceptance: {passed}/{} criteria pass, {undocumented} undocumented failures", outcomes.len());
    if undocumented == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
