use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use tatelab_core::cft::{InstanceFile, ValidationReport};
use tatelab_core::lab::Check;

use crate::anchor;

pub const ARTIFACT_VERSION: &str = concat!("tatelab ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    pub id: String,
    pub anchor: String,
    pub pass: bool,
    pub witness: Value,
}

impl Record {
    pub fn new(id: &str, pass: bool, witness: Value) -> Record {
        Record { id: id.into(), anchor: anchor(id).into(), pass, witness }
    }
}

impl From<Check> for Record {
    fn from(c: Check) -> Record {
        Record::new(&c.id, c.pass, c.witness)
    }
}

/// Outcome of `validate` or `analyze` on one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub artifact_version: String,
    pub command: String,
    pub instance: String,
    pub instance_digest: String,
    pub records: Vec<Record>,
    pub verdict: String,
}

impl Report {
    pub fn new(command: &str, file: &InstanceFile, mut records: Vec<Record>) -> Report {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let pass = records.iter().all(|r| r.pass);
        Report {
            artifact_version: ARTIFACT_VERSION.into(),
            command: command.into(),
            instance: file.name.clone(),
            instance_digest: instance_digest(file),
            records,
            verdict: verdict(pass).into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} [{}]\n", self.command, self.instance, self.instance_digest);
        for r in &self.records {
            out += &format!("{} {}  ({})\n", if r.pass { "PASS" } else { "FAIL" }, r.id, r.anchor);
            if !r.pass {
                out += &format!("     witness: {}\n", r.witness);
            }
        }
        out + &format!("verdict: {}\n", self.verdict)
    }
}

pub(crate) fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

/// SHA-256 of the compact serialization of an instance file.
pub fn instance_digest(file: &InstanceFile) -> String {
    let text = serde_json::to_string(file).expect("instance serializes");
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn validate_report(file: &InstanceFile, v: &ValidationReport) -> Report {
    let records = if v.is_clean() {
        vec![Record::new("validate.clean", true, json!({"violations": 0}))]
    } else {
        v.violations
            .iter()
            .enumerate()
            .map(|(i, x)| Record::new(&format!("validate.{}.{i:03}", x.code), false, json!({"message": x.message, "witness": x.witness})))
            .collect()
    };
    Report::new("validate", file, records)
}
