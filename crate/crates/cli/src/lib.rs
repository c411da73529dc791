//! Command-line front end for the Tate-sequence laboratory: instance validation,
//! analysis pipelines, self-test campaigns and deterministic JSON reports.

pub mod analyze;
pub mod anchors;
pub mod report;
pub mod selftest;

pub use analyze::{analyze, parse_window, CheckGroup};
pub use anchors::anchor;
pub use report::{instance_digest, validate_report, Record, Report, ARTIFACT_VERSION};
pub use selftest::{campaign_instance, selftest, SelftestReport, DEFAULT_GROUPS};

/// Environment variable capping the worker count of `selftest`.
pub const WORKERS_ENV: &str = "TATELAB_WORKERS";
