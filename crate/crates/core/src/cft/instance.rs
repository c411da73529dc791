use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::gmodule::GModule;
use crate::groups::{cosets_and_reps, first_non_multiplicative, Cosets, FiniteGroup, GroupError, Subgroup};
use crate::int::Int;
use crate::lattice::{FgAb, IntMatrix};

use super::CftError;

pub const SCHEMA_VERSION: u32 = 1;

fn abstract_label() -> String {
    "abstract".into()
}

/// On-disk form of an instance. All indices are 0-based.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema_version: u32,
    pub name: String,
    #[serde(default = "abstract_label")]
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    /// Multiplication table of `G`.
    pub group: Vec<Vec<usize>>,
    pub places: Vec<PlaceFile>,
    #[serde(default)]
    pub aux_places: Vec<AuxPlaceFile>,
    pub cl: ClFile,
    /// Multiplication table of `G^S`.
    pub gs: Vec<Vec<usize>>,
    /// `pi[s]` is the image in `G` of `s ∈ G^S`.
    pub pi: Vec<usize>,
    /// `kappa[i]` is the image of the `i`-th class (mixed radix, first coordinate most significant).
    pub kappa: Vec<usize>,
    /// `iota[p][k]` is the image of `places[p].subgroup[k]`.
    pub iota: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PlaceFile {
    pub id: String,
    pub subgroup: Vec<usize>,
    pub is_p0: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AuxPlaceFile {
    pub id: String,
    pub frobenius_class: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<usize>>,
}

/// `Cl = ⊕ Z/d_i` on generators `e_i`, with `action[g]` the matrix of `g` (rows).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ClFile {
    pub invariant_factors: Vec<u64>,
    pub action: Vec<Vec<Vec<i64>>>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<InstanceFile, String> {
        let f: InstanceFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if f.schema_version != SCHEMA_VERSION {
            return Err(format!("unsupported schema version {}", f.schema_version));
        }
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// One invariant failure, with data to replay it.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Violation {
    pub code: String,
    pub message: String,
    pub witness: Value,
}

impl Violation {
    fn new(code: &str, message: impl Into<String>, witness: Value) -> Violation {
        Violation { code: code.into(), message: message.into(), witness }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ValidationReport {
    pub instance: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, code: &str) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }
}

/// A place of `S` with its decomposition group and section `ι_p : G_p → G^S`.
#[derive(Clone, Debug)]
pub struct Place {
    pub id: String,
    pub subgroup: Subgroup,
    pub is_p0: bool,
    /// Aligned with `subgroup.elements()`.
    pub iota: Vec<usize>,
    pub cosets: Cosets,
}

/// A place of `S' \ S` with the Artin class of its Frobenius.
#[derive(Clone, Debug)]
pub struct AuxPlace {
    pub id: String,
    pub frobenius: Vec<Int>,
    pub subgroup: Subgroup,
}

/// An abstract instance. Construction checks shapes only; see [`Instance::validate`].
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub label: String,
    pub provenance: Option<String>,
    pub group: FiniteGroup,
    pub places: Vec<Place>,
    pub aux: Vec<AuxPlace>,
    pub cl: GModule,
    pub cl_orders: Vec<usize>,
    pub gs: FiniteGroup,
    pub pi: Vec<usize>,
    pub kappa: Vec<usize>,
    kappa_inv: Vec<Option<usize>>,
}

fn cl_module(g: &FiniteGroup, orders: &[usize], action: Vec<IntMatrix>) -> Result<GModule, String> {
    let ab = FgAb::from_orders(&orders.iter().map(|&d| Int::from(d)).collect::<Vec<_>>());
    GModule::new(g, ab, action).map_err(|e| e.to_string())
}

impl Instance {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: &str,
        group: FiniteGroup,
        places: Vec<(String, Subgroup, bool, Vec<usize>)>,
        aux: Vec<(String, Vec<Int>)>,
        cl: GModule,
        cl_orders: Vec<usize>,
        gs: FiniteGroup,
        pi: Vec<usize>,
        kappa: Vec<usize>,
    ) -> Instance {
        let places = places
            .into_iter()
            .map(|(id, subgroup, is_p0, iota)| {
                let cosets = cosets_and_reps(&group, &subgroup);
                Place { id, subgroup, is_p0, iota, cosets }
            })
            .collect();
        let aux = aux
            .into_iter()
            .map(|(id, f)| AuxPlace { id, frobenius: f, subgroup: Subgroup::trivial(&group) })
            .collect();
        let mut kappa_inv = vec![None; gs.order()];
        for (i, &s) in kappa.iter().enumerate() {
            if s < gs.order() && kappa_inv[s].is_none() {
                kappa_inv[s] = Some(i);
            }
        }
        Instance {
            name: name.into(),
            label: abstract_label(),
            provenance: None,
            group,
            places,
            aux,
            cl,
            cl_orders,
            gs,
            pi,
            kappa,
            kappa_inv,
        }
    }

    /// Builds an instance from its file form, reporting shape errors as violations.
    pub fn from_file(f: &InstanceFile) -> Result<Instance, Vec<Violation>> {
        let mut v = Vec::new();
        let table = |which: &str, t: &Vec<Vec<usize>>, v: &mut Vec<Violation>| match FiniteGroup::from_table(t.clone()) {
            Ok(g) => Some(g),
            Err(GroupError::NotAGroup { axiom, witness }) => {
                v.push(Violation::new(
                    "NotAGroup",
                    format!("{which}: {axiom} fails"),
                    json!({"table": which, "axiom": axiom, "witness": witness}),
                ));
                None
            }
            Err(e) => {
                v.push(Violation::new("NotAGroup", format!("{which}: {e}"), json!({"table": which})));
                None
            }
        };
        let g = table("group", &f.group, &mut v);
        let gs = table("gs", &f.gs, &mut v);
        let (Some(g), Some(gs)) = (g, gs) else {
            return Err(v);
        };
        let shape = |v: &mut Vec<Violation>, msg: String, w: Value| v.push(Violation::new("ShapeError", msg, w));

        let mut ids = BTreeSet::new();
        for id in f.places.iter().map(|p| &p.id).chain(f.aux_places.iter().map(|q| &q.id)) {
            if !ids.insert(id.clone()) {
                v.push(Violation::new("DuplicateId", format!("place id {id} repeated"), json!({"id": id})));
            }
        }
        if f.places.is_empty() {
            shape(&mut v, "no places".into(), json!({}));
        }
        if f.iota.len() != f.places.len() {
            shape(&mut v, "one iota table per place required".into(), json!({"places": f.places.len(), "iota": f.iota.len()}));
        }
        if f.pi.len() != gs.order() || f.pi.iter().any(|&x| x >= g.order()) {
            shape(&mut v, "pi must map each element of G^S into G".into(), json!({"len": f.pi.len()}));
        }
        let k = f.cl.invariant_factors.len();
        if f.cl.invariant_factors.contains(&0) {
            v.push(Violation::new("ClNotFinite", "class group must be finite", json!({"factors": f.cl.invariant_factors})));
        }
        let orders: Vec<usize> = f.cl.invariant_factors.iter().map(|&d| d as usize).collect();
        let cl_size: usize = orders.iter().product();
        if f.kappa.len() != cl_size || f.kappa.iter().any(|&x| x >= gs.order()) {
            shape(&mut v, "kappa must map each class into G^S".into(), json!({"len": f.kappa.len(), "classes": cl_size}));
        }
        let square = |m: &Vec<Vec<i64>>| m.len() == k && m.iter().all(|r| r.len() == k);
        if f.cl.action.len() != g.order() || !f.cl.action.iter().all(square) {
            shape(&mut v, "cl action needs one k x k matrix per element of G".into(), json!({"k": k}));
        }
        for q in &f.aux_places {
            if q.frobenius_class.len() != k {
                shape(&mut v, format!("frobenius class of {} has wrong length", q.id), json!({"id": q.id}));
            }
        }
        let mut subgroups = Vec::new();
        for (p, pf) in f.places.iter().enumerate() {
            match Subgroup::new(&g, &pf.subgroup) {
                Ok(h) => subgroups.push(h),
                Err(e) => v.push(Violation::new("NotASubgroup", format!("place {}: {e}", pf.id), json!({"place": p}))),
            }
            if let Some(t) = f.iota.get(p) {
                if t.len() != pf.subgroup.len() || t.iter().any(|&x| x >= gs.order()) {
                    shape(&mut v, format!("iota of place {} has wrong shape", pf.id), json!({"place": p}));
                }
            }
            let mut seen = pf.subgroup.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != pf.subgroup.len() {
                shape(&mut v, format!("subgroup of place {} lists an element twice", pf.id), json!({"place": p}));
            }
        }
        let mut aux = Vec::new();
        for q in &f.aux_places {
            let h = match &q.subgroup {
                None => Subgroup::trivial(&g),
                Some(els) => match Subgroup::new(&g, els) {
                    Ok(h) => h,
                    Err(e) => {
                        v.push(Violation::new("NotASubgroup", format!("aux place {}: {e}", q.id), json!({"id": q.id})));
                        continue;
                    }
                },
            };
            aux.push(AuxPlace { id: q.id.clone(), frobenius: q.frobenius_class.iter().map(|&x| Int::from(x)).collect(), subgroup: h });
        }
        if !v.is_empty() {
            return Err(v);
        }
        let action = f.cl.action.iter().map(|m| IntMatrix::from_i64_rows(m)).collect();
        let cl = match cl_module(&g, &orders, action) {
            Ok(m) => m,
            Err(e) => return Err(vec![Violation::new("InvalidClAction", e, json!({}))]),
        };
        let places = f
            .places
            .iter()
            .zip(subgroups)
            .zip(&f.iota)
            .map(|((pf, h), t)| {
                let iota = h.elements().iter().map(|&x| t[pf.subgroup.iter().position(|&y| y == x).unwrap()]).collect();
                (pf.id.clone(), h, pf.is_p0, iota)
            })
            .collect();
        let mut inst = Instance::new(&f.name, g, places, vec![], cl, orders, gs, f.pi.clone(), f.kappa.clone());
        inst.aux = aux;
        inst.label = f.label.clone();
        inst.provenance = f.provenance.clone();
        Ok(inst)
    }

    pub fn to_file(&self) -> InstanceFile {
        let to_i64 = |x: &Int| x.to_i64().expect("small entry");
        let action = self
            .group
            .elements()
            .map(|g| {
                let m = self.cl.action(g);
                (0..m.rows()).map(|i| m.row(i).iter().map(to_i64).collect()).collect()
            })
            .collect();
        InstanceFile {
            schema_version: SCHEMA_VERSION,
            name: self.name.clone(),
            label: self.label.clone(),
            provenance: self.provenance.clone(),
            group: self.group.table(),
            places: self
                .places
                .iter()
                .map(|p| PlaceFile { id: p.id.clone(), subgroup: p.subgroup.elements().to_vec(), is_p0: p.is_p0 })
                .collect(),
            aux_places: self
                .aux
                .iter()
                .map(|q| AuxPlaceFile {
                    id: q.id.clone(),
                    frobenius_class: q.frobenius.iter().map(to_i64).collect(),
                    subgroup: None,
                })
                .collect(),
            cl: ClFile { invariant_factors: self.cl_orders.iter().map(|&d| d as u64).collect(), action },
            gs: self.gs.table(),
            pi: self.pi.clone(),
            kappa: self.kappa.clone(),
            iota: self.places.iter().map(|p| p.iota.clone()).collect(),
        }
    }

    pub fn cl_size(&self) -> usize {
        self.cl_orders.iter().product()
    }

    /// Reduces each coordinate modulo its order.
    pub fn cl_reduce(&self, x: &[Int]) -> Vec<Int> {
        x.iter().zip(&self.cl_orders).map(|(v, &d)| v.mod_floor(&Int::from(d))).collect()
    }

    pub fn cl_index(&self, x: &[Int]) -> usize {
        self.cl_reduce(x)
            .iter()
            .zip(&self.cl_orders)
            .fold(0, |acc, (v, &d)| acc * d + v.to_usize().expect("reduced"))
    }

    pub fn cl_element(&self, mut i: usize) -> Vec<Int> {
        let mut x = vec![Int::ZERO; self.cl_orders.len()];
        for (slot, &d) in x.iter_mut().zip(&self.cl_orders).rev() {
            *slot = Int::from(i % d);
            i /= d;
        }
        x
    }

    pub fn cl_elements(&self) -> Vec<Vec<Int>> {
        (0..self.cl_size()).map(|i| self.cl_element(i)).collect()
    }

    pub fn cl_act(&self, g: usize, x: &[Int]) -> Vec<Int> {
        self.cl_reduce(&self.cl.act(g, x))
    }

    pub fn kappa_of(&self, x: &[Int]) -> usize {
        self.kappa[self.cl_index(x)]
    }

    /// The class whose image is `s`, if `s` lies in the image of `kappa`.
    pub fn kappa_inv(&self, s: usize) -> Option<Vec<Int>> {
        self.kappa_inv[s].map(|i| self.cl_element(i))
    }

    pub fn p0(&self) -> usize {
        self.places.iter().position(|p| p.is_p0).expect("instance has a distinguished place")
    }

    pub fn iota(&self, p: usize, tau: usize) -> Result<usize, CftError> {
        let place = self.places.get(p).ok_or(CftError::UnknownPlace(p))?;
        let k = place.subgroup.position(tau).ok_or(CftError::NotInDecompositionGroup { place: p, element: tau })?;
        Ok(place.iota[k])
    }

    /// The lift `ι_{p0}(g)` of `g ∈ G`.
    pub fn lift(&self, g: usize) -> usize {
        self.iota(self.p0(), g).expect("p0 has full decomposition group")
    }

    /// The Frobenius class of an auxiliary place as an element of `G^S`.
    pub fn frobenius_in_gs(&self, q: usize) -> usize {
        self.kappa_of(&self.aux[q].frobenius)
    }

    /// Checks every model axiom, returning all violations.
    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        let (g, gs) = (&self.group, &self.gs);
        let p0s: Vec<usize> = (0..self.places.len()).filter(|&p| self.places[p].is_p0).collect();
        if p0s.len() != 1 {
            v.push(Violation::new("P0Count", "exactly one place must be distinguished", json!({"p0": p0s})));
        }
        for &p in &p0s {
            if !self.places[p].subgroup.is_whole() {
                v.push(Violation::new(
                    "P0NotFull",
                    "distinguished place needs decomposition group G",
                    json!({"place": p, "order": self.places[p].subgroup.order()}),
                ));
            }
        }
        if let Some((a, b)) = first_non_multiplicative(gs, g, &self.pi) {
            v.push(Violation::new("PiNotHomomorphism", "pi is not multiplicative", json!({"pair": [a, b]})));
        }
        let mut hit = vec![false; g.order()];
        for &x in &self.pi {
            hit[x] = true;
        }
        if let Some(x) = hit.iter().position(|&h| !h) {
            v.push(Violation::new("PiNotSurjective", "pi misses an element", json!({"element": x})));
        }
        self.check_kappa(&mut v);
        for (p, place) in self.places.iter().enumerate() {
            let els = place.subgroup.elements();
            'outer: for (i, &a) in els.iter().enumerate() {
                for (j, &b) in els.iter().enumerate() {
                    let ab = g.mul(a, b);
                    let k = place.subgroup.position(ab).unwrap();
                    if place.iota[k] != gs.mul(place.iota[i], place.iota[j]) {
                        v.push(Violation::new(
                            "IotaNotHomomorphism",
                            format!("iota of place {} is not multiplicative", place.id),
                            json!({"place": p, "pair": [a, b]}),
                        ));
                        break 'outer;
                    }
                }
            }
            for (i, &a) in els.iter().enumerate() {
                if self.pi[place.iota[i]] != a {
                    v.push(Violation::new(
                        "IotaNotSection",
                        format!("pi o iota is not the inclusion at place {}", place.id),
                        json!({"place": p, "element": a}),
                    ));
                    break;
                }
            }
        }
        let classes = self.cl_elements();
        'conj: for s in gs.elements() {
            for (i, c) in classes.iter().enumerate() {
                let lhs = gs.conj(s, self.kappa[i]);
                let rhs = self.kappa_of(&self.cl_act(self.pi[s], c));
                if lhs != rhs {
                    v.push(Violation::new(
                        "ConjugationIncompatible",
                        "conjugation in G^S does not realize the action on Cl",
                        json!({"gs_element": s, "class": i}),
                    ));
                    break 'conj;
                }
            }
        }
        for (q, aux) in self.aux.iter().enumerate() {
            if aux.subgroup.order() != 1 {
                v.push(Violation::new(
                    "AuxNotSplit",
                    format!("auxiliary place {} must split completely", aux.id),
                    json!({"aux": q}),
                ));
            }
        }
        if !self.frobenius_generate() {
            v.push(Violation::new(
                "ConditionII",
                "Frobenius classes of auxiliary places do not generate Cl over Z[G]",
                json!({"frobenius": self.aux.iter().map(|q| self.cl_index(&q.frobenius)).collect::<Vec<_>>()}),
            ));
        }
        ValidationReport { instance: self.name.clone(), violations: v }
    }

    fn check_kappa(&self, v: &mut Vec<Violation>) {
        let gs = &self.gs;
        let els = self.cl_elements();
        'hom: for (i, x) in els.iter().enumerate() {
            for (j, y) in els.iter().enumerate() {
                let sum: Vec<Int> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                if self.kappa_of(&sum) != gs.mul(self.kappa[i], self.kappa[j]) {
                    v.push(Violation::new("KappaNotHomomorphism", "kappa is not additive", json!({"pair": [i, j]})));
                    break 'hom;
                }
            }
        }
        let image: BTreeSet<usize> = self.kappa.iter().copied().collect();
        if image.len() != self.kappa.len() {
            v.push(Violation::new("KappaNotInjective", "kappa identifies two classes", json!({})));
        }
        let kernel: BTreeSet<usize> = gs.elements().filter(|&s| self.pi[s] == self.group.identity()).collect();
        if image != kernel {
            v.push(Violation::new(
                "KappaImageNotKernel",
                "image of kappa differs from the kernel of pi",
                json!({"image": image.len(), "kernel": kernel.len()}),
            ));
        }
    }

    /// Whether the Frobenius classes generate `Cl` as a `Z[G]`-module.
    pub fn frobenius_generate(&self) -> bool {
        let k = self.cl_orders.len();
        let cols: Vec<Vec<Int>> = self.aux.iter().map(|q| q.frobenius.clone()).collect();
        let span = self.cl.orbit_span(&IntMatrix::from_cols(k, &cols));
        let (sub, _) = self.cl.ab().subgroup(&span);
        sub.order() == self.cl.ab().order()
    }
}

/// Shape checks followed by the model axioms.
pub fn validate_instance(f: &InstanceFile) -> ValidationReport {
    match Instance::from_file(f) {
        Ok(inst) => inst.validate(),
        Err(violations) => ValidationReport { instance: f.name.clone(), violations },
    }
}
