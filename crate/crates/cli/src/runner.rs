//! Runs cases on a bounded worker pool and writes their reports in case
//! order.

use std::io::Write;
use std::time::Instant;

use anyhow::Result;
use rayon::prelude::*;
use serde_json::Value;

use schurtau_core::check::{Case, Report, Status, Tally};

use crate::format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub jobs: usize,
    pub format: Format,
    /// Adds `elapsed_ms` to each JSON line. Output is then no longer
    /// reproducible byte for byte.
    pub timing: bool,
}

/// Everything a run produced.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub tally: Tally,
    pub first_failure: Option<Report>,
}

/// Cases are handed to the pool in blocks so output streams while later
/// blocks are still running; each block is written in case order.
pub fn run<W: Write>(cases: &[Case], opts: &RunOptions, config: Value, out: &mut W) -> Result<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()?;
    let block = 16 * opts.jobs.max(1);
    let mut reports = Vec::with_capacity(cases.len());
    let mut first_failure = None;
    for chunk in cases.chunks(block) {
        let done: Vec<(Report, f64)> = pool.install(|| {
            chunk
                .par_iter()
                .map(|c| {
                    let start = Instant::now();
                    let r = c.run();
                    (r, start.elapsed().as_secs_f64() * 1e3)
                })
                .collect()
        });
        for (r, ms) in done {
            write_report(out, &r, opts, ms)?;
            if r.status == Status::Fail && first_failure.is_none() {
                first_failure = Some(r.clone());
            }
            reports.push(r);
        }
    }
    let tally = Tally::of(&reports);
    match opts.format {
        Format::Json => writeln!(out, "{}", format::summary(&tally, config))?,
        Format::Text => writeln!(
            out,
            "{} cases: {} passed, {} failed, {} flagged",
            tally.total, tally.passed, tally.failed, tally.flagged
        )?,
    }
    out.flush()?;
    Ok(Outcome {
        tally,
        first_failure,
    })
}

fn write_report<W: Write>(out: &mut W, r: &Report, opts: &RunOptions, ms: f64) -> Result<()> {
    match opts.format {
        Format::Json => {
            let v = format::report(r, opts.timing.then_some(ms));
            writeln!(out, "{v}")?;
        }
        Format::Text => {
            let mut line = format!("{:<7} {}/{} {}", r.status.name(), r.suite, r.check, r.case);
            if let Some(c) = &r.constant_found {
                line.push_str(&format!("  c={c}"));
            }
            if opts.timing {
                line.push_str(&format!("  {ms:.1}ms"));
            }
            if r.status != Status::Pass {
                if let Some(n) = &r.note {
                    line.push_str(&format!("\n        note: {n}"));
                }
                if let Some(w) = &r.witness {
                    line.push_str(&format!("\n        witness: {w}"));
                }
            }
            writeln!(out, "{line}")?;
        }
    }
    Ok(())
}

/// Worker count when neither `--jobs` nor `SCHURTAU_JOBS` is given.
pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
