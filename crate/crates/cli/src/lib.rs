//! Command-line front end: coefficient tables under any measure, and the
//! verification checks, in text, JSON or CSV.

use std::io::{self, Write};

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};

use nquot_core::exp::exp_reformulation;
use nquot_core::strata::{enumerate_nested, oracle_series};
use nquot_core::verify::{compare, euler_table, verify_against, CheckReport};
use nquot_core::{
    lift_measure_to_series, main_series, MeasureKind, MeasureSpec, QuotSeriesConfig, TruncatedSeries,
    UniversalMotive,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Coefficient table under the chosen measure
    Compute,
    /// Cross-check every route to the generating function
    Verify,
    /// Euler characteristics from three independent routes
    EulerTable,
    /// Compare the motivic exponential with the product formula
    ExpCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Universal,
    HodgeDeligne,
    SignedPoincare,
    Euler,
}

impl From<Measure> for MeasureKind {
    fn from(m: Measure) -> Self {
        match m {
            Measure::Universal => MeasureKind::Universal,
            Measure::HodgeDeligne => MeasureKind::HodgeDeligne,
            Measure::SignedPoincare => MeasureKind::SignedPoincare,
            Measure::Euler => MeasureKind::Euler,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Motives of nested Quot schemes of points on a smooth curve.
#[derive(Debug, Clone, Parser)]
#[command(name = "nquot", version)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Rank r of the locally free sheaf
    #[arg(short = 'r', long = "rank", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub rank: u32,
    /// Nesting depth d
    #[arg(short = 'd', long = "depth", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..64))]
    pub depth: u32,
    /// Genus of the curve (used by the specializing measures)
    #[arg(short = 'g', long = "genus", default_value_t = 0)]
    pub genus: u32,
    /// Truncation bound applied to every variable
    #[arg(short = 'N', long = "cap", default_value_t = 5)]
    pub cap: u32,
    #[arg(long, value_enum, default_value_t = Measure::Universal)]
    pub measure: Measure,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl RunConfig {
    pub fn series_config(&self) -> nquot_core::Result<QuotSeriesConfig> {
        QuotSeriesConfig::uniform(self.rank, self.depth as usize, self.cap)
    }

    fn measure_kind(&self) -> MeasureKind {
        self.measure.into()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub n: Vec<u32>,
    pub value: String,
}

/// JSON shape of `compute`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeOutput {
    pub r: u32,
    pub d: u32,
    pub genus: u32,
    pub measure: String,
    pub cap: u32,
    pub coefficients: Vec<CoefficientRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
}

impl From<&CheckReport> for CheckRow {
    fn from(r: &CheckReport) -> Self {
        Self {
            name: r.name.clone(),
            passed: r.passed(),
            n: r.mismatch.as_ref().map(|m| m.exponent.to_string()),
            left: r.mismatch.as_ref().map(|m| m.left.clone()),
            right: r.mismatch.as_ref().map(|m| m.right.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutput {
    pub r: u32,
    pub d: u32,
    pub genus: u32,
    pub cap: u32,
    pub passed: bool,
    pub checks: Vec<CheckRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerTableRow {
    pub n: Vec<u32>,
    pub closed_form: String,
    pub measure: String,
    pub count: Option<String>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerTableOutput {
    pub r: u32,
    pub d: u32,
    pub genus: u32,
    pub cap: u32,
    pub rows: Vec<EulerTableRow>,
}

#[derive(Debug)]
pub enum CliError {
    Engine(nquot_core::Error),
    Io(io::Error),
    Csv(csv::Error),
    Json(serde_json::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Csv(e) => write!(f, "csv error: {e}"),
            CliError::Json(e) => write!(f, "json error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<nquot_core::Error> for CliError {
    fn from(e: nquot_core::Error) -> Self {
        CliError::Engine(e)
    }
}
impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}
impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Csv(e)
    }
}
impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

/// Runs a parsed command and returns the process exit status.
pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    match cfg.command {
        Command::Compute => cmd_compute(cfg, out),
        Command::Verify => cmd_verify(cfg, out),
        Command::EulerTable => cmd_euler_table(cfg, out),
        Command::ExpCheck => cmd_exp_check(cfg, out),
    }
}

pub fn compute_output(cfg: &RunConfig) -> Result<ComputeOutput, CliError> {
    let series_cfg = cfg.series_config()?;
    let spec = MeasureSpec::new(cfg.measure_kind(), cfg.genus);
    let measured = lift_measure_to_series(&main_series(&series_cfg)?, spec);
    let coefficients = enumerate_nested(series_cfg.depth(), cfg.cap)
        .map(|n| {
            Ok(CoefficientRow {
                value: measured.coefficient_string(&n.exponent())?,
                n: n.as_slice().to_vec(),
            })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(ComputeOutput {
        r: cfg.rank,
        d: cfg.depth,
        genus: cfg.genus,
        measure: spec.kind.name().to_string(),
        cap: cfg.cap,
        coefficients,
    })
}

fn tuple_str(n: &[u32]) -> String {
    let parts: Vec<String> = n.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn header(cfg: &RunConfig) -> String {
    format!(
        "# r={} d={} genus={} cap={} measure={}",
        cfg.rank,
        cfg.depth,
        cfg.genus,
        cfg.cap,
        cfg.measure_kind().name()
    )
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn n_columns(d: u32) -> Vec<String> {
    (1..=d).map(|i| format!("n{i}")).collect()
}

pub fn cmd_compute(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let table = compute_output(cfg)?;
    match cfg.format {
        Format::Text => {
            writeln!(out, "{}", header(cfg))?;
            for row in &table.coefficients {
                writeln!(out, "{} = {}", tuple_str(&row.n), row.value)?;
            }
        }
        Format::Json => write_json(out, &table)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut head = n_columns(cfg.depth);
            head.push("value".into());
            w.write_record(&head)?;
            for row in &table.coefficients {
                let mut rec: Vec<String> = row.n.iter().map(u32::to_string).collect();
                rec.push(row.value.clone());
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn report_checks(cfg: &RunConfig, reports: &[CheckReport], out: &mut dyn Write) -> Result<i32, CliError> {
    let passed = reports.iter().all(CheckReport::passed);
    match cfg.format {
        Format::Text => {
            writeln!(out, "# r={} d={} genus={} cap={}", cfg.rank, cfg.depth, cfg.genus, cfg.cap)?;
            for r in reports {
                writeln!(out, "{r}")?;
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if passed {
                writeln!(out, "all {} checks passed", reports.len())?;
            } else {
                writeln!(out, "{failed} of {} checks failed", reports.len())?;
            }
        }
        Format::Json => write_json(
            out,
            &CheckOutput {
                r: cfg.rank,
                d: cfg.depth,
                genus: cfg.genus,
                cap: cfg.cap,
                passed,
                checks: reports.iter().map(CheckRow::from).collect(),
            },
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["check", "passed", "n", "left", "right"])?;
            for r in reports {
                let row = CheckRow::from(r);
                w.write_record([
                    row.name,
                    row.passed.to_string(),
                    row.n.unwrap_or_default(),
                    row.left.unwrap_or_default(),
                    row.right.unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_CHECK_FAILED })
}

pub fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let series_cfg = cfg.series_config()?;
    let oracle = oracle_series(&series_cfg)?;
    cmd_verify_with_oracle(cfg, &oracle, out)
}

/// `verify` with a caller-supplied strata sum in place of the computed one.
pub fn cmd_verify_with_oracle(
    cfg: &RunConfig,
    oracle: &TruncatedSeries<UniversalMotive>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let reports = verify_against(&cfg.series_config()?, cfg.genus, oracle)?;
    report_checks(cfg, &reports, out)
}

pub fn cmd_exp_check(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let series_cfg = cfg.series_config()?;
    let report = compare(
        "motivic exponential = product formula",
        &exp_reformulation(&series_cfg)?,
        &main_series(&series_cfg)?,
    );
    report_checks(cfg, &[report], out)
}

pub fn cmd_euler_table(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows: Vec<EulerTableRow> = euler_table(&cfg.series_config()?, cfg.genus)?
        .into_iter()
        .map(|row| EulerTableRow {
            agrees: row.agrees(),
            n: row.n.as_slice().to_vec(),
            closed_form: row.closed_form.to_string(),
            measure: row.measure.to_string(),
            count: row.count.map(|c| c.to_string()),
        })
        .collect();
    let all_agree = rows.iter().all(|r| r.agrees);
    match cfg.format {
        Format::Text => {
            writeln!(out, "# r={} d={} genus={} cap={}", cfg.rank, cfg.depth, cfg.genus, cfg.cap)?;
            writeln!(out, "# n closed-form / measure / count")?;
            for row in &rows {
                writeln!(
                    out,
                    "{} {} / {} / {}{}",
                    tuple_str(&row.n),
                    row.closed_form,
                    row.measure,
                    row.count.as_deref().unwrap_or("-"),
                    if row.agrees { "" } else { "  MISMATCH" }
                )?;
            }
        }
        Format::Json => write_json(
            out,
            &EulerTableOutput { r: cfg.rank, d: cfg.depth, genus: cfg.genus, cap: cfg.cap, rows },
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut head = n_columns(cfg.depth);
            head.extend(["closed_form", "measure", "count", "agrees"].map(String::from));
            w.write_record(&head)?;
            for row in rows {
                let mut rec: Vec<String> = row.n.iter().map(u32::to_string).collect();
                rec.extend([row.closed_form, row.measure, row.count.unwrap_or_default(), row.agrees.to_string()]);
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
    }
    Ok(if all_agree { EXIT_OK } else { EXIT_CHECK_FAILED })
}
