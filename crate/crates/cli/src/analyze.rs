use std::str::FromStr;

use serde_json::json;
use tatelab_core::cft::Instance;
use tatelab_core::gmodule::is_short_exact;
use tatelab_core::lab::{
    build_nabla, delta1, delta1_invariance, delta_minus2, fixture_unit_check, gens_of_homology, h_minus1_x_vanishes,
    norm_suite, r_element, snake_closed_form, snake_closed_form_twisted, subgroups_cdc, Fixture, Lab, LabError, LAB_WINDOW,
};
use tatelab_core::Int;

use crate::report::Record;

/// Selectable pipelines of `analyze`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckGroup {
    Wrb,
    ScriptH,
    Snake,
    Nabla,
    Delta,
    HX,
    Gens,
    Delta1,
    Norm,
    Fixture,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 10] = [
        CheckGroup::Wrb,
        CheckGroup::ScriptH,
        CheckGroup::Snake,
        CheckGroup::Nabla,
        CheckGroup::Delta,
        CheckGroup::HX,
        CheckGroup::Gens,
        CheckGroup::Delta1,
        CheckGroup::Norm,
        CheckGroup::Fixture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckGroup::Wrb => "wrb",
            CheckGroup::ScriptH => "script-h",
            CheckGroup::Snake => "snake",
            CheckGroup::Nabla => "nabla",
            CheckGroup::Delta => "delta",
            CheckGroup::HX => "hx",
            CheckGroup::Gens => "gens",
            CheckGroup::Delta1 => "delta1",
            CheckGroup::Norm => "norm",
            CheckGroup::Fixture => "fixture",
        }
    }
}

impl FromStr for CheckGroup {
    type Err = String;

    fn from_str(s: &str) -> Result<CheckGroup, String> {
        CheckGroup::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check group {s:?}; expected one of {}", names()))
    }
}

fn names() -> String {
    CheckGroup::ALL.map(|c| c.name()).join(", ")
}

/// Parses `lo..hi` and requires the window to reach Tate degrees `-2..1`.
pub fn parse_window(s: &str) -> Result<(i32, i32), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("window {s:?} is not of the form lo..hi"))?;
    let lo: i32 = lo.trim().parse().map_err(|_| format!("bad window bound {lo:?}"))?;
    let hi: i32 = hi.trim().parse().map_err(|_| format!("bad window bound {hi:?}"))?;
    if lo > LAB_WINDOW.0 || hi < LAB_WINDOW.1 {
        return Err(format!("window {lo}..{hi} must contain {}..{}", LAB_WINDOW.0, LAB_WINDOW.1));
    }
    Ok((lo, hi))
}

fn wrb_checks(lab: &Lab) -> Vec<Record> {
    let w = &lab.wrb;
    let exact = is_short_exact(&w.r_to_b, &w.b_to_x) && w.b.ngens() == w.r.ngens() + lab.xy.x.ngens();
    let failing: Vec<&str> = [("w_to_zg", &w.w_to_zg), ("r_to_b", &w.r_to_b), ("b_to_x", &w.b_to_x), ("s", &lab.snake.s)]
        .into_iter()
        .filter(|(_, m)| m.verify_equivariance().is_err())
        .map(|(n, _)| n)
        .collect();
    vec![
        Record::new("wrb.exact", exact, json!({"w": w.w.ngens(), "r": w.r.ngens(), "b": w.b.ngens(), "x": lab.xy.x.ngens()})),
        Record::new("wrb.equivariant", failing.is_empty(), json!({"failing": failing})),
    ]
}

fn script_h_checks(lab: &Lab) -> Vec<Record> {
    let sh = &lab.sh;
    vec![
        Record::new(
            "script_h.embedding_injective",
            sh.e.ab.is_injective(),
            json!({"cl": lab.inst.cl.ab().describe(), "h": sh.module.ab().describe()}),
        ),
        Record::new("script_h.embedding_equivariant", sh.e.verify_equivariance().is_ok(), json!({})),
        Record::new(
            "script_h.action_well_defined",
            sh.action_lift_independent(&lab.inst) && sh.module.verify_axioms().is_ok(),
            json!({}),
        ),
    ]
}

fn snake_checks(lab: &Lab) -> Result<Vec<Record>, LabError> {
    let inst = &lab.inst;
    let cdc = subgroups_cdc(inst, &lab.res)?;
    let (mut total, mut literal_mismatches) = (0usize, 0usize);
    let mut twisted_bad = None;
    let mut mod_d_bad = None;
    for (p, place) in inst.places.iter().enumerate() {
        if p == inst.p0() {
            continue;
        }
        for &tau in &place.cosets.reps {
            for sigma in inst.group.elements() {
                total += 1;
                let s = lab.snake.apply_r(inst, &r_element(inst, &lab.wrb, p, sigma, tau)?);
                let twisted = snake_closed_form_twisted(inst, p, sigma, tau)?;
                let literal = snake_closed_form(inst, p, sigma, tau)?;
                if s != twisted && twisted_bad.is_none() {
                    twisted_bad = Some(json!({"place": p, "sigma": sigma, "tau": tau, "snake": s, "closed_form": twisted}));
                }
                if s != literal {
                    literal_mismatches += 1;
                    if mod_d_bad.is_none() && cdc.class(&lab.res, inst, &s)? != cdc.class(&lab.res, inst, &literal)? {
                        mod_d_bad = Some(json!({"place": p, "sigma": sigma, "tau": tau, "snake": s, "literal": literal}));
                    }
                }
            }
        }
    }
    let frob: Vec<usize> = (0..inst.aux.len())
        .filter(|&q| lab.snake.s_q_one(inst, &lab.wrb, q) != inst.cl_reduce(&inst.aux[q].frobenius))
        .collect();
    Ok(vec![
        Record::new(
            "snake.r_closed_form",
            twisted_bad.is_none(),
            json!({"elements": total, "literal_mismatches": literal_mismatches, "counterexample": twisted_bad}),
        ),
        Record::new("snake.r_literal_mod_d", mod_d_bad.is_none(), json!({"elements": total, "counterexample": mod_d_bad})),
        Record::new("snake.q_frobenius", frob.is_empty(), json!({"aux": inst.aux.len(), "failing": frob})),
    ])
}

/// Runs the selected pipelines on one instance.
pub fn analyze(
    inst: &Instance,
    groups: &[CheckGroup],
    window: (i32, i32),
    fixture: Option<&Fixture>,
) -> Result<Vec<Record>, LabError> {
    let lab = Lab::with_window(inst, window)?;
    let mut out = Vec::new();
    let needs_nabla = groups.iter().any(|g| matches!(g, CheckGroup::Nabla | CheckGroup::Delta));
    let nabla = if needs_nabla { Some(build_nabla(inst, &lab.xy, &lab.wrb, &lab.snake)?) } else { None };
    for &g in groups {
        match g {
            CheckGroup::Wrb => out.extend(wrb_checks(&lab)),
            CheckGroup::ScriptH => out.extend(script_h_checks(&lab)),
            CheckGroup::Snake => out.extend(snake_checks(&lab)?),
            CheckGroup::Nabla => {
                let n = nabla.as_ref().expect("built above");
                out.push(Record::new(
                    "nabla.class_matches_g",
                    n.class_matches(&lab.res),
                    json!({"g": (0..inst.group.order()).map(|s| n.g.value(s).to_vec()).collect::<Vec<_>>()}),
                ));
                let exact = is_short_exact(&n.seq.iota, &n.seq.pi) && n.torsion_order() == inst.cl_size();
                out.push(Record::new(
                    "nabla.exact",
                    exact,
                    json!({"nabla": n.nabla.ab().describe(), "torsion": n.torsion_order(), "cl": inst.cl_size()}),
                ));
            }
            CheckGroup::Delta => {
                let d = delta_minus2(inst, &lab.res, &lab.xy, nabla.as_ref().expect("built above"))?;
                let gens: Vec<_> = d
                    .generators
                    .iter()
                    .map(|x| json!({"place": x.place, "tau": x.tau, "generic": x.generic, "closed": x.closed}))
                    .collect();
                out.push(Record::new(
                    "delta_minus2.agreement",
                    d.agree(),
                    json!({
                        "source": d.delta.source.group().describe(),
                        "target": d.delta.target.group().describe(),
                        "zero_map": d.delta.map.is_zero(),
                        "generators": gens,
                    }),
                ));
            }
            CheckGroup::HX => {
                let ok = h_minus1_x_vanishes(&lab.res, &lab.xy)?;
                out.push(Record::new("homology.h_minus1_x_zero", ok, json!({"x_rank": lab.xy.x.ngens()})));
            }
            CheckGroup::Gens => {
                let goh = gens_of_homology(inst, &lab.res, &lab.xy)?;
                out.push(Record::new(
                    "homology.gens_iso",
                    goh.orders_equal() && goh.bijective(),
                    json!({"orders_equal": goh.orders_equal(), "bijective": goh.bijective()}),
                ));
            }
            CheckGroup::Delta1 => {
                let d = delta1(&lab)?;
                let cdc = subgroups_cdc(inst, &lab.res)?;
                let mut bad = None;
                let mut tested = 0;
                let exponent = inst.cl_orders.iter().fold(Int::ONE, |acc, &o| acc.lcm(&Int::from(o as u64)));
                for q in 0..inst.aux.len() {
                    for scale in [Int::ONE, exponent.clone()] {
                        let mut a = vec![Int::ZERO; inst.aux.len()];
                        a[q] = scale;
                        let x = match d.apply(&lab, &a) {
                            Ok(x) => x,
                            Err(LabError::NotNormKilled) => continue,
                            Err(e) => return Err(e),
                        };
                        let y = d.generic_value(&lab, &a)?;
                        tested += 1;
                        if x != y && bad.is_none() {
                            bad = Some(json!({"a": a, "delta1": x, "generic": y}));
                        }
                    }
                }
                out.push(Record::new("delta1.generic_agreement", bad.is_none(), json!({"tested": tested, "counterexample": bad})));
                out.push(delta1_invariance(&lab, &d, &cdc, 8, 0)?.into());
            }
            CheckGroup::Norm => out.extend(norm_suite(&lab)?.into_iter().map(Record::from)),
            CheckGroup::Fixture => {
                if let Some(f) = fixture {
                    out.extend(fixture_unit_check(&lab, f)?.into_iter().map(Record::from));
                }
            }
        }
    }
    Ok(out)
}
