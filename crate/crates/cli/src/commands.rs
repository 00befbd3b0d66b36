use std::io::Write;
use std::time::Instant;

use cfroots::families::FamilySpec;
use cfroots::{isolate_all, verify_isolation, IntPoly, IsolationReport, SolverConfig};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::{describe_family, Input};
use crate::record::{BenchRow, RunRecord, StatsRecord, VerifyRecord};
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    /// One JSON object per line.
    Structured,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub budan_pruning: bool,
    pub homothety_threshold: u64,
    pub stats: bool,
    pub format: Format,
    pub node_ceiling: Option<u64>,
}

impl Default for Options {
    fn default() -> Self {
        let cfg = SolverConfig::default();
        Options {
            budan_pruning: cfg.budan_pruning,
            homothety_threshold: cfg.homothety_threshold,
            stats: false,
            format: Format::Text,
            node_ceiling: None,
        }
    }
}

impl Options {
    pub fn solver_config(&self) -> SolverConfig {
        SolverConfig {
            homothety_threshold: self.homothety_threshold,
            budan_pruning: self.budan_pruning,
            node_ceiling: self.node_ceiling,
            ..SolverConfig::default()
        }
    }
}

/// Parses the `CF_NODE_CEILING` value.
pub fn parse_node_ceiling(value: &str) -> CliResult<u64> {
    match value.trim().parse::<u64>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(CliError::Usage(format!(
            "CF_NODE_CEILING must be a positive integer, got '{value}'"
        ))),
    }
}

fn timed_isolation(
    a: &IntPoly,
    cfg: &SolverConfig,
) -> CliResult<(IsolationReport, std::time::Duration)> {
    let start = Instant::now();
    let report = isolate_all(a, cfg)?;
    Ok((report, start.elapsed()))
}

fn check_degree(input: &Input) -> CliResult<()> {
    if input.poly.degree() == 0 {
        return Err(CliError::Usage(format!(
            "{}: constant polynomial, nothing to isolate",
            input.descriptor
        )));
    }
    Ok(())
}

fn emit<T: Serialize>(
    out: &mut dyn Write,
    format: Format,
    record: &T,
    text: String,
) -> CliResult<()> {
    match format {
        Format::Text => out.write_all(text.as_bytes())?,
        Format::Structured => {
            serde_json::to_writer(&mut *out, record)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

pub fn isolate(inputs: &[Input], opts: &Options, out: &mut dyn Write) -> CliResult<Vec<RunRecord>> {
    let cfg = opts.solver_config();
    let mut records = Vec::with_capacity(inputs.len());
    for input in inputs {
        check_degree(input)?;
        let (report, elapsed) = timed_isolation(&input.poly, &cfg)?;
        let rec = RunRecord::new(
            input.descriptor.clone(),
            input.poly.degree(),
            &report,
            elapsed,
            opts.stats,
        );
        emit(out, opts.format, &rec, rec.to_text())?;
        records.push(rec);
    }
    Ok(records)
}

/// Returns whether every input passed the oracle.
pub fn verify(inputs: &[Input], opts: &Options, out: &mut dyn Write) -> CliResult<bool> {
    let cfg = opts.solver_config();
    let mut all_passed = true;
    for input in inputs {
        check_degree(input)?;
        let (report, elapsed) = timed_isolation(&input.poly, &cfg)?;
        let verdict = verify_isolation(&input.poly, &report);
        let run = RunRecord::new(
            input.descriptor.clone(),
            input.poly.degree(),
            &report,
            elapsed,
            opts.stats,
        );
        let rec = VerifyRecord::new(run, &verdict);
        all_passed &= rec.passed;
        emit(out, opts.format, &rec, rec.to_text())?;
    }
    Ok(all_passed)
}

/// Runs each family instance, possibly in parallel. Rows come out sorted
/// by family then degree whatever the completion order.
pub fn bench(
    specs: &[FamilySpec],
    opts: &Options,
    jobs: Option<usize>,
    out: &mut dyn Write,
) -> CliResult<Vec<BenchRow>> {
    let mut specs = specs.to_vec();
    specs.sort_by_key(|s| (s.family, s.degree));
    specs.dedup();
    let cfg = opts.solver_config();

    let run = |spec: &FamilySpec| -> CliResult<BenchRow> {
        let a = spec.build()?;
        let (report, elapsed) = timed_isolation(&a, &cfg)?;
        Ok(BenchRow {
            family: spec.family.to_string(),
            degree: spec.degree,
            input: describe_family(spec),
            roots: report.intervals.len(),
            node_count: report.stats.node_count,
            wall_time_s: elapsed.as_secs_f64(),
            stats: opts.stats.then(|| StatsRecord::from(&report.stats)),
        })
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let rows = pool
        .install(|| specs.par_iter().map(run).collect::<Vec<_>>())
        .into_iter()
        .collect::<CliResult<Vec<_>>>()?;

    if opts.format == Format::Text {
        writeln!(out, "{}", BenchRow::TEXT_HEADER)?;
    }
    for row in &rows {
        emit(out, opts.format, row, format!("{}\n", row.to_text()))?;
    }
    Ok(rows)
}
