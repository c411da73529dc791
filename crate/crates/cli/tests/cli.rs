use std::path::{Path, PathBuf};
use std::process::Command;

use tatelab_cli::{anchor, Report, SelftestReport};
use tatelab_core::cft::{i2_plain, i2_twist, InstanceFile};

fn data(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn tatelab(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tatelab")).args(args).output().expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).expect("utf-8"))
}

fn path(rel: &str) -> String {
    data(rel).to_str().unwrap().to_string()
}

#[test]
fn worked_instance_files_match_the_synthesizer() {
    for (file, inst) in [("instances/i2_twist.json", i2_twist()), ("instances/i2_plain.json", i2_plain())] {
        let expected = inst.to_file().to_json() + "\n";
        if std::env::var_os("TATELAB_BLESS").is_some() {
            std::fs::write(data(file), &expected).unwrap();
        }
        let actual = std::fs::read_to_string(data(file)).unwrap();
        assert_eq!(actual, expected, "{file}");
    }
}

#[test]
fn validate_exit_codes() {
    let (code, out) = tatelab(&["validate", &path("instances/i2_twist.json")]);
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert!(report.passed());

    let dir = tempfile::tempdir().unwrap();
    let mut broken: InstanceFile = InstanceFile::from_json(&std::fs::read_to_string(data("instances/i2_twist.json")).unwrap()).unwrap();
    broken.group[1][1] = 1;
    let p = dir.path().join("broken.json");
    std::fs::write(&p, broken.to_json()).unwrap();
    let (code, out) = tatelab(&["validate", p.to_str().unwrap()]);
    assert_eq!(code, 1);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert!(report.records.iter().any(|r| r.id.starts_with("validate.NotAGroup") && !r.pass));

    let p = dir.path().join("garbage.json");
    std::fs::write(&p, "{ not json").unwrap();
    assert_eq!(tatelab(&["validate", p.to_str().unwrap()]).0, 2);
    assert_eq!(tatelab(&["validate", "/nonexistent/file.json"]).0, 2);
}

#[test]
fn analyze_worked_instances() {
    let (code, out) = tatelab(&["analyze", &path("instances/i2_twist.json")]);
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert!(report.records.len() >= 10);
    assert!(report.records.iter().all(|r| r.pass && r.anchor == anchor(&r.id) && r.anchor != "unanchored"));
    let ids: Vec<&str> = report.records.iter().map(|r| r.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);

    let (code, out) = tatelab(&["analyze", &path("instances/i2_plain.json"), "--checks", "delta"]);
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.records.len(), 1);
    assert_eq!(report.records[0].witness["zero_map"], true);
}

#[test]
fn analyze_operational_errors() {
    let inst = path("instances/i2_twist.json");
    assert_eq!(tatelab(&["analyze", &inst, "--checks", "norm", "--fixture", "/missing/fixture.json"]).0, 2);
    assert_eq!(tatelab(&["analyze", &inst, "--checks", "fixture"]).0, 2);
    assert_eq!(tatelab(&["analyze", &inst, "--checks", "bogus"]).0, 2);
    assert_eq!(tatelab(&["analyze", &inst, "--window", "-1..1"]).0, 2);
    assert_eq!(tatelab(&["analyze", &inst, "--checks", "hx", "--window", "-4..3"]).0, 0);
}

#[test]
fn analyze_real_field_fixture() {
    let (code, out) = tatelab(&[
        "analyze",
        &path("instances/q_sqrt_minus14.json"),
        "--fixture",
        &path("fixtures/q_sqrt_minus14.json"),
    ]);
    assert_eq!(code, 0, "{out}");
    let report: Report = serde_json::from_str(&out).unwrap();
    assert!(report.records.iter().filter(|r| r.id.starts_with("fixture.")).count() >= 3);
}

#[test]
fn inconsistent_fixture_fails_with_named_class() {
    let dir = tempfile::tempdir().unwrap();
    let mut f: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(data("fixtures/q_sqrt_minus14.json")).unwrap()).unwrap();
    f["classes"][1]["cocycle"][0] = serde_json::json!([0, 1, 0]);
    let p = dir.path().join("bad.json");
    std::fs::write(&p, f.to_string()).unwrap();
    let (code, out) =
        tatelab(&["analyze", &path("instances/q_sqrt_minus14.json"), "--checks", "fixture", "--fixture", p.to_str().unwrap()]);
    assert_eq!(code, 1);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.records[0].id, "fixture.class1.consistent");
}

#[test]
fn selftest_small_runs() {
    let (code, out) = tatelab(&["selftest", "--groups", "C2", "--seeds", "1"]);
    assert_eq!(code, 0);
    let report: SelftestReport = serde_json::from_str(&out).unwrap();
    assert!(report.instances >= 1);
    let (code, out) = tatelab(&["selftest", "--seeds", "0"]);
    assert_eq!(code, 0);
    let report: SelftestReport = serde_json::from_str(&out).unwrap();
    assert_eq!((report.instances, report.totals.len()), (0, 0));
    assert_eq!(tatelab(&["selftest", "--groups", "Z7x"]).0, 2);
}

#[test]
fn reports_round_trip() {
    let (_, out) = tatelab(&["analyze", &path("instances/i2_twist.json")]);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.to_json(), out);
    let (_, out) = tatelab(&["selftest", "--groups", "C3", "--seeds", "2"]);
    let report: SelftestReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.to_json(), out);
}
