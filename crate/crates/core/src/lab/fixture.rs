use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cohomology::{cohomology, is_coboundary, Cocycle1};
use crate::gmodule::GModule;
use crate::int::Int;
use crate::lattice::{AbMap, FgAb, IntMatrix};

use super::{subgroups_cdc, Check, Lab, LabError, Span};

pub const FIXTURE_SCHEMA_VERSION: u32 = 1;

/// The unit module `U` as invariant factors (`0` for a copy of `Z`) and action matrices by rows.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitModuleFile {
    pub invariant_factors: Vec<u64>,
    pub action: Vec<Vec<Vec<i64>>>,
}

/// One tested class of `H^{-1}(G, Cl)`, given by auxiliary coefficients `a` with
/// representative `Σ a_q φ̄_q`, and the cocycle `τ ↦ τ(α)/α` of a generator `α`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassFixture {
    pub a: Vec<i64>,
    /// Values indexed by group element, in the coordinates of `U`.
    pub cocycle: Vec<Vec<i64>>,
    pub a_in_units_times_k: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub schema_version: u32,
    pub instance: String,
    #[serde(default)]
    pub provenance: Option<String>,
    pub unit_module: UnitModuleFile,
    pub classes: Vec<ClassFixture>,
}

impl Fixture {
    pub fn from_json(text: &str) -> Result<Fixture, LabError> {
        let f: Fixture = serde_json::from_str(text).map_err(|e| LabError::FixtureSchemaError(e.to_string()))?;
        if f.schema_version != FIXTURE_SCHEMA_VERSION {
            return Err(LabError::FixtureSchemaError(format!("unsupported schema version {}", f.schema_version)));
        }
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixture serializes")
    }

    fn unit_module(&self, lab: &Lab) -> Result<GModule, LabError> {
        let g = &lab.inst.group;
        let u = &self.unit_module;
        let k = u.invariant_factors.len();
        let schema = |m: String| LabError::FixtureSchemaError(m);
        if u.action.len() != g.order() || u.action.iter().any(|a| a.len() != k || a.iter().any(|r| r.len() != k)) {
            return Err(schema("unit module action needs one k×k matrix per group element".into()));
        }
        let mut rel = Vec::new();
        for (i, &d) in u.invariant_factors.iter().enumerate() {
            if d == 1 {
                return Err(schema("invariant factor 1 is not allowed".into()));
            }
            if d > 1 {
                let mut c = vec![Int::ZERO; k];
                c[i] = Int::from(d);
                rel.push(c);
            }
        }
        let ab = FgAb::new(k, IntMatrix::from_cols(k, &rel));
        let action = u.action.iter().map(|a| IntMatrix::from_i64_rows(a)).collect();
        GModule::new(g, ab, action).map_err(|e| schema(format!("unit module: {e}")))
    }
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

/// Checks a fixture against the instance: cocycle identities, the coboundary / norm-flag /
/// `C̄`-membership biconditional, and injectivity of `H^{-1}(G, Cl)/C̄ → H^1(G, U)`.
pub fn fixture_unit_check(lab: &Lab, fixture: &Fixture) -> Result<Vec<Check>, LabError> {
    let inst = &lab.inst;
    let res = &lab.res;
    let g = &inst.group;
    let u = fixture.unit_module(lab)?;
    let cdc = subgroups_cdc(inst, res)?;
    let h = cdc.h_minus1.group().clone();
    let h1 = cohomology(res, &u, 1)?;
    let mut out = Vec::new();
    let mut h_classes = Vec::new();
    let mut u_classes = Vec::new();
    for (i, cf) in fixture.classes.iter().enumerate() {
        if cf.a.len() != inst.aux.len() || cf.cocycle.len() != g.order() || cf.cocycle.iter().any(|v| v.len() != u.ngens())
        {
            return Err(LabError::FixtureSchemaError(format!("class {i} has the wrong shape")));
        }
        let w = Cocycle1::new(&u, cf.cocycle.iter().map(|v| ints(v)).collect())
            .map_err(|_| LabError::InconsistentFixture { class: i, reason: "cocycle identity fails".into() })?;
        let mut c = vec![Int::ZERO; inst.cl.ngens()];
        for (aq, q) in cf.a.iter().zip(&inst.aux) {
            for (x, y) in c.iter_mut().zip(&q.frobenius) {
                *x += Int::from(*aq) * y;
            }
        }
        if !inst.cl.is_zero(&inst.cl.norm(&c)) {
            return Err(LabError::InconsistentFixture { class: i, reason: "representative is not killed by N".into() });
        }
        let hc = cdc.class(res, inst, &c)?;
        let in_cbar = cdc.cbar.contains(&hc);
        let cob = is_coboundary(res, &u, 1, &w.to_cochain());
        out.push(Check::new(
            &format!("fixture.class{i}.biconditional"),
            cob == cf.a_in_units_times_k && cob == in_cbar,
            json!({"class": i, "coboundary": cob, "flag": cf.a_in_units_times_k, "in_cbar": in_cbar, "h_minus1": hc}),
        ));
        h_classes.push(hc);
        u_classes.push(h1.group().reduce_canon(&h1.class_of(&w.to_cochain())?));
    }
    let k = fixture.classes.len();
    let free = FgAb::free(k);
    let (hq, proj) = h.quotient(&cdc.cbar.gens);
    let to_hq: Vec<Vec<Int>> = h_classes.iter().map(|c| hq.reduce_canon(&proj.apply(c))).collect();
    let m1 = AbMap::new_unchecked(free.clone(), hq.clone(), IntMatrix::from_cols(hq.ngens(), &to_hq));
    let m2 = AbMap::new_unchecked(free.clone(), h1.group().clone(), IntMatrix::from_cols(h1.group().ngens(), &u_classes));
    let k1 = Span::new(&free, m1.kernel().1.matrix);
    let k2 = Span::new(&free, m2.kernel().1.matrix);
    out.push(Check::new(
        "fixture.injective_hom",
        k1.same_as(&k2),
        json!({"classes": k, "h1_u": h1.group().describe()}),
    ));
    let quotient_order = hq.order();
    let image_order = m2.image().0.order();
    out.push(Check::new(
        "fixture.order_match",
        quotient_order.is_some() && quotient_order == image_order,
        json!({"h_minus1_mod_cbar": quotient_order, "image": image_order}),
    ));
    Ok(out)
}
