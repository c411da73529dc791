use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use tatelab_core::cft::{campaign_params, synth_instance, CftError, Instance};
use tatelab_core::groups::FiniteGroup;
use tatelab_core::lab::LAB_WINDOW;

use crate::analyze::{analyze, CheckGroup};
use crate::report::{instance_digest, verdict, Record, ARTIFACT_VERSION};

pub const DEFAULT_GROUPS: &[&str] = &["C2", "C3", "C4", "V4", "S3", "D4", "Q8"];

/// Derived seeds tried when the parameters for a seed are unsatisfiable.
const RETRIES: u64 = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Totals {
    pub anchor: String,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Failure {
    pub group: String,
    pub seed: u64,
    pub instance: String,
    pub instance_digest: String,
    pub id: String,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedRef {
    pub group: String,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelftestReport {
    pub artifact_version: String,
    pub command: String,
    pub groups: Vec<String>,
    pub seeds: u64,
    pub instances: usize,
    pub unsatisfiable: Vec<SeedRef>,
    pub totals: BTreeMap<String, Totals>,
    pub failures: Vec<Failure>,
    pub minimal_failing_seed: Option<SeedRef>,
    pub verdict: String,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("selftest over {} x {} seeds: {} instances\n", self.groups.join(","), self.seeds, self.instances);
        for (id, t) in &self.totals {
            out += &format!("{:>5} pass {:>4} fail  {id}\n", t.pass, t.fail);
        }
        for f in &self.failures {
            out += &format!("FAIL {} {} seed {}: {}\n", f.id, f.group, f.seed, f.witness);
        }
        out + &format!("verdict: {}\n", self.verdict)
    }
}

/// The campaign instance for `(group, seed)`, retrying derived seeds on unsatisfiable parameters.
pub fn campaign_instance(group: &FiniteGroup, seed: u64) -> Result<Instance, CftError> {
    let mut last = None;
    for k in 0..RETRIES {
        match synth_instance(&campaign_params(group, seed.wrapping_add(k << 32))) {
            Ok(inst) => return Ok(inst),
            Err(e @ CftError::UnsatisfiableParams(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

enum Outcome {
    Ran { instance: String, digest: String, records: Vec<Record> },
    Unsatisfiable,
}

fn run_one(group: &FiniteGroup, seed: u64) -> Outcome {
    let inst = match campaign_instance(group, seed) {
        Ok(i) => i,
        Err(CftError::UnsatisfiableParams(_)) => return Outcome::Unsatisfiable,
        Err(e) => {
            return Outcome::Ran {
                instance: format!("{}-seed{seed}", group.name()),
                digest: String::new(),
                records: vec![Record::new("pipeline.error", false, json!({"error": e.to_string()}))],
            }
        }
    };
    let groups: Vec<CheckGroup> = CheckGroup::ALL.into_iter().filter(|g| *g != CheckGroup::Fixture).collect();
    let records = analyze(&inst, &groups, LAB_WINDOW, None)
        .unwrap_or_else(|e| vec![Record::new("pipeline.error", false, json!({"error": e.to_string()}))]);
    Outcome::Ran { instance: inst.name.clone(), digest: instance_digest(&inst.to_file()), records }
}

/// Runs every pipeline on `seeds` campaign instances per group. Output is independent of scheduling.
pub fn selftest(groups: &[FiniteGroup], seeds: u64) -> SelftestReport {
    let jobs: Vec<(usize, u64)> = (0..groups.len()).flat_map(|g| (0..seeds).map(move |s| (g, s))).collect();
    let outcomes: Vec<Outcome> = jobs.par_iter().map(|&(g, s)| run_one(&groups[g], s)).collect();
    let mut totals: BTreeMap<String, Totals> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut unsatisfiable = Vec::new();
    let mut instances = 0;
    for (&(g, seed), outcome) in jobs.iter().zip(outcomes) {
        let group = groups[g].name().to_string();
        match outcome {
            Outcome::Unsatisfiable => unsatisfiable.push(SeedRef { group, seed }),
            Outcome::Ran { instance, digest, records } => {
                instances += 1;
                for r in records {
                    let t = totals.entry(r.id.clone()).or_insert(Totals { anchor: r.anchor.clone(), pass: 0, fail: 0 });
                    if r.pass {
                        t.pass += 1;
                    } else {
                        t.fail += 1;
                        failures.push(Failure {
                            group: group.clone(),
                            seed,
                            instance: instance.clone(),
                            instance_digest: digest.clone(),
                            id: r.id,
                            witness: r.witness,
                        });
                    }
                }
            }
        }
    }
    failures.sort_by(|a, b| (a.seed, &a.group, &a.id).cmp(&(b.seed, &b.group, &b.id)));
    let minimal_failing_seed = failures.first().map(|f| SeedRef { group: f.group.clone(), seed: f.seed });
    SelftestReport {
        artifact_version: ARTIFACT_VERSION.into(),
        command: "selftest".into(),
        groups: groups.iter().map(|g| g.name().to_string()).collect(),
        seeds,
        instances,
        unsatisfiable,
        totals,
        verdict: verdict(failures.is_empty()).into(),
        failures,
        minimal_failing_seed,
    }
}
