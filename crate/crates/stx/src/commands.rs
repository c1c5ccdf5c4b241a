//! The experiments behind each subcommand. Every function returns reports
//! or text; printing and exit codes are left to the binary.

use std::path::Path;
use std::time::Instant;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use stx_core::tableaux::{count_constrained, predicted_complexity};
use stx_core::witness::{
    check_full_monster_caps, measure_full_monster, measure_witness, witness_pair,
};
use stx_core::{Dfa, FinalZone, Limits};

use crate::error::{CliError, Result};
use crate::figures::{all_figures, Figure};
use crate::formats::{alpha_rows, export_dot_named, export_json, write_csv, DfaJson};
use crate::report::{ExperimentReport, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Enumerate constrained tableaux and compare with the closed count.
    Formula,
    /// Minimize StX on the full 2-monster.
    FullMonster,
    /// Minimize StX on the 17-letter witness.
    Witness,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::FullMonster => "full-monster",
            Method::Witness => "witness",
            Method::All => "all",
        }
    }
}

/// Runs one measurement; a limit error becomes a skipped report.
fn measured_report(
    report: ExperimentReport,
    predicted: u128,
    run: impl FnOnce() -> stx_core::Result<u128>,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    match run() {
        Ok(measured) => Ok(report.compare(measured, predicted).timed(start)),
        Err(e) if e.is_limit() => Ok(report.skip(e).timed(start)),
        Err(e) => Err(e.into()),
    }
}

/// State complexity of StX at `(n1, n2)` by the requested method(s), each
/// compared exactly with `2α_{n1-1,n2-1} + α'_{n1,n2}`.
pub fn cmd_sc(
    n1: usize,
    n2: usize,
    method: Method,
    limits: &Limits,
) -> Result<Vec<ExperimentReport>> {
    if n1 == 0 || n2 == 0 {
        return Err(CliError::Usage("sizes must be positive".into()));
    }
    let methods: &[Method] = match method {
        Method::All => &[Method::Formula, Method::FullMonster, Method::Witness],
        Method::Formula => &[Method::Formula],
        Method::FullMonster => &[Method::FullMonster],
        Method::Witness => &[Method::Witness],
    };
    let predicted = predicted_complexity(n1, n2)?;
    let mut reports = Vec::with_capacity(methods.len());
    for &m in methods {
        let base = ExperimentReport::new("sc").sizes(n1, n2).method(m.name());
        let report = match m {
            Method::Formula => measured_report(base, predicted, || {
                count_constrained(&FinalZone::witness(n1, n2)?)
            })?,
            Method::FullMonster => measured_report(
                base.param("F1", format!("{{{}}}", n1 - 1))
                    .param("F2", "{0}"),
                predicted,
                || measure_full_monster(n1, n2, &[n1 - 1], &[0], limits).map(|v| v as u128),
            )?,
            Method::Witness if n1 < 2 || n2 < 2 => {
                base.skip("the bounded alphabet needs n1, n2 >= 2")
            }
            Method::Witness => measured_report(base, predicted, || {
                measure_witness(n1, n2, limits).map(|v| v as u128)
            })?,
            Method::All => unreachable!("expanded above"),
        };
        reports.push(report);
    }
    Ok(reports)
}

/// One final-set pair of a sweep. `predicted` is the value measured at the
/// reference pair `({n1-1}, {0})`; a row passes when it does not exceed it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n1: usize,
    pub n2: usize,
    #[serde(rename = "F1")]
    pub f1: String,
    #[serde(rename = "F2")]
    pub f2: String,
    pub measured: usize,
    pub predicted: usize,
    pub verdict: String,
}

fn set_name(set: &[usize]) -> String {
    let items: Vec<String> = set.iter().map(|q| q.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Minimal StX sizes on the full 2-monster for every pair of final sets.
/// Passes iff the maximum is reached at `({n1-1}, {0})`.
pub fn cmd_sweep_finals(
    n1: usize,
    n2: usize,
    limits: &Limits,
) -> Result<(ExperimentReport, Vec<SweepRow>)> {
    if n1 == 0 || n2 == 0 {
        return Err(CliError::Usage("sizes must be positive".into()));
    }
    let start = Instant::now();
    let report = ExperimentReport::new("sweep-finals")
        .sizes(n1, n2)
        .method("full-monster");
    if let Err(e) = check_full_monster_caps(n1, n2, limits) {
        if e.is_limit() {
            return Ok((report.skip(e).timed(start), Vec::new()));
        }
        return Err(e.into());
    }
    let pairs: Vec<(Vec<usize>, Vec<usize>)> = subsets(n1)
        .into_iter()
        .flat_map(|f1| subsets(n2).into_iter().map(move |f2| (f1.clone(), f2)))
        .collect();
    let sizes: Vec<usize> = pairs
        .par_iter()
        .map(|(f1, f2)| measure_full_monster(n1, n2, f1, f2, limits))
        .collect::<stx_core::Result<_>>()?;
    let reference_pair = (vec![n1 - 1], vec![0]);
    let reference = pairs
        .iter()
        .zip(&sizes)
        .find(|(p, _)| **p == reference_pair)
        .map(|(_, &s)| s)
        .expect("reference pair is swept");
    let max = sizes.iter().copied().max().unwrap_or(0);
    let rows: Vec<SweepRow> = pairs
        .iter()
        .zip(&sizes)
        .map(|((f1, f2), &measured)| SweepRow {
            n1,
            n2,
            f1: set_name(f1),
            f2: set_name(f2),
            measured,
            predicted: reference,
            verdict: if measured <= reference {
                Verdict::Pass
            } else {
                Verdict::Fail
            }
            .to_string(),
        })
        .collect();
    let argmax: Vec<String> = rows
        .iter()
        .filter(|r| r.measured == max)
        .map(|r| format!("({},{})", r.f1, r.f2))
        .collect();
    let report = report
        .param("pairs", rows.len())
        .param("argmax", argmax.join(" "))
        .compare(max as u128, reference as u128)
        .timed(start);
    Ok((report, rows))
}

/// Checks every drawn transition, finality and initial state of the four
/// reconstructed drawings.
pub fn cmd_verify_figures() -> Result<ExperimentReport> {
    let start = Instant::now();
    let figures = all_figures()?;
    let total: usize = figures.iter().map(Figure::fact_count).sum();
    let problems: Vec<String> = figures.iter().flat_map(Figure::mismatches).collect();
    let matched = total.saturating_sub(problems.len());
    let mut report = ExperimentReport::new("verify-figures")
        .param("figures", figures.len())
        .compare(matched as u128, total as u128);
    if !problems.is_empty() {
        report = report.reason(problems.join("; "));
    }
    Ok(report.timed(start))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportTarget {
    Example1,
    Figure1,
    Figure2,
    Figure3,
    Witness,
    AlphaTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
    Csv,
}

/// Both witness machines in one document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub n1: usize,
    pub n2: usize,
    pub b1: DfaJson,
    pub b2: DfaJson,
}

pub fn import_witness_json(text: &str) -> Result<(Dfa, Dfa)> {
    let w: WitnessJson = serde_json::from_str(text)?;
    Ok((Dfa::try_from(w.b1)?, Dfa::try_from(w.b2)?))
}

fn unsupported(target: ExportTarget, format: ExportFormat) -> CliError {
    CliError::Usage(format!("{target:?} cannot be exported as {format:?}"))
}

/// Renders an export target. `sizes` only matters for the witness.
pub fn cmd_export(
    target: ExportTarget,
    format: ExportFormat,
    sizes: (usize, usize),
) -> Result<String> {
    let figure = match target {
        ExportTarget::Example1 => Some(crate::figures::example1()?),
        ExportTarget::Figure1 => Some(crate::figures::figure1()?),
        ExportTarget::Figure2 => Some(crate::figures::figure2()?),
        ExportTarget::Figure3 => Some(crate::figures::figure3()?),
        _ => None,
    };
    if let Some(f) = figure {
        return match format {
            ExportFormat::Dot => Ok(export_dot_named(&f.dfa, f.name, &f.state_names)),
            ExportFormat::Json => export_json(&f.dfa),
            ExportFormat::Csv => Err(unsupported(target, format)),
        };
    }
    match (target, format) {
        (ExportTarget::Witness, ExportFormat::Json) => {
            let (b1, b2) = witness_pair(sizes.0, sizes.1)?;
            let doc = WitnessJson {
                n1: sizes.0,
                n2: sizes.1,
                b1: DfaJson::from(&b1),
                b2: DfaJson::from(&b2),
            };
            Ok(serde_json::to_string_pretty(&doc)?)
        }
        (ExportTarget::Witness, ExportFormat::Dot) => {
            let (b1, b2) = witness_pair(sizes.0, sizes.1)?;
            let names = |d: &Dfa| {
                (0..d.state_count())
                    .map(|q| q.to_string())
                    .collect::<Vec<_>>()
            };
            Ok(format!(
                "{}{}",
                export_dot_named(&b1, "B1", &names(&b1)),
                export_dot_named(&b2, "B2", &names(&b2))
            ))
        }
        (ExportTarget::AlphaTable, ExportFormat::Csv) => write_csv(&alpha_rows(4)?),
        (ExportTarget::AlphaTable, ExportFormat::Json) => {
            Ok(serde_json::to_string_pretty(&alpha_rows(4)?)?)
        }
        _ => Err(unsupported(target, format)),
    }
}

/// Writes `text` to `path`, naming the path in any error.
pub fn write_output(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}
