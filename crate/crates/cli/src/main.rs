use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tatelab_cli::{analyze, parse_window, selftest, validate_report, CheckGroup, Record, Report, DEFAULT_GROUPS, WORKERS_ENV};
use tatelab_core::cft::{validate_instance, Instance, InstanceFile};
use tatelab_core::groups::FiniteGroup;
use tatelab_core::lab::{Fixture, LabError, LAB_WINDOW};

#[derive(Parser)]
#[command(name = "tatelab", version, about = "Tate-sequence laboratory over abstract class-field data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check an instance file against the instance axioms.
    Validate {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run analysis pipelines on an instance.
    Analyze {
        path: PathBuf,
        /// Comma-separated pipelines: wrb, script-h, snake, nabla, delta, hx, gens, delta1, norm, fixture.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<CheckGroup>>,
        /// Resolution window `lo..hi`; it must contain -3..2.
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: Option<(i32, i32)>,
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run every pipeline on randomly synthesized instances.
    Selftest {
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_GROUPS.iter().map(|s| s.to_string()))]
        groups: Vec<String>,
        #[arg(long, default_value_t = 10)]
        seeds: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Operational failure: exit code 2.
struct OpError(String);

fn read(path: &Path) -> Result<String, OpError> {
    std::fs::read_to_string(path).map_err(|e| OpError(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), OpError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| OpError(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}

fn code(pass: bool) -> ExitCode {
    ExitCode::from(if pass { 0 } else { 1 })
}

fn load_instance(path: &Path) -> Result<InstanceFile, OpError> {
    InstanceFile::from_json(&read(path)?).map_err(|e| OpError(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<ExitCode, OpError> {
    match cli.command {
        Command::Validate { path, out, format } => {
            let file = load_instance(&path)?;
            let report = validate_report(&file, &validate_instance(&file));
            emit(&render(&report, format), out.as_deref())?;
            Ok(code(report.passed()))
        }
        Command::Analyze { path, checks, window, fixture, out, format } => {
            let file = load_instance(&path)?;
            let fixture = match &fixture {
                Some(p) => Some(Fixture::from_json(&read(p)?).map_err(|e| OpError(format!("{}: {e}", p.display())))?),
                None => None,
            };
            let groups = match checks {
                Some(mut c) => {
                    c.sort();
                    c.dedup();
                    c
                }
                None => CheckGroup::ALL.into_iter().filter(|g| *g != CheckGroup::Fixture || fixture.is_some()).collect(),
            };
            if groups.contains(&CheckGroup::Fixture) && fixture.is_none() {
                return Err(OpError("the fixture pipeline needs --fixture".into()));
            }
            let validation = validate_instance(&file);
            if !validation.is_clean() {
                let report = validate_report(&file, &validation);
                emit(&render(&report, format), out.as_deref())?;
                return Ok(code(false));
            }
            let inst = Instance::from_file(&file).map_err(|v| OpError(format!("instance rejected: {v:?}")))?;
            let records = match analyze(&inst, &groups, window.unwrap_or(LAB_WINDOW), fixture.as_ref()) {
                Ok(r) => r,
                Err(LabError::FixtureSchemaError(e)) => return Err(OpError(format!("fixture: {e}"))),
                Err(LabError::InconsistentFixture { class, reason }) => vec![Record::new(
                    &format!("fixture.class{class}.consistent"),
                    false,
                    serde_json::json!({"class": class, "reason": reason}),
                )],
                Err(e) => vec![Record::new("pipeline.error", false, serde_json::json!({"error": e.to_string()}))],
            };
            let report = Report::new("analyze", &file, records);
            emit(&render(&report, format), out.as_deref())?;
            Ok(code(report.passed()))
        }
        Command::Selftest { groups, seeds, out, format } => {
            let groups = groups
                .iter()
                .map(|n| FiniteGroup::named(n).ok_or_else(|| OpError(format!("unknown group {n:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let report = selftest(&groups, seeds);
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            emit(&text, out.as_deref())?;
            Ok(code(report.passed()))
        }
    }
}

fn configure_workers() -> Result<(), OpError> {
    if let Ok(v) = std::env::var(WORKERS_ENV) {
        let n: usize = v.parse().map_err(|_| OpError(format!("{WORKERS_ENV} must be a positive integer, got {v:?}")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| OpError(format!("worker pool: {e}")))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match configure_workers().and_then(|()| run(cli)) {
        Ok(c) => c,
        Err(OpError(msg)) => {
            eprintln!("tatelab: {msg}");
            ExitCode::from(2)
        }
    }
}
