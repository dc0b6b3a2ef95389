//! Command-line arguments and the commands behind them.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schurtau_core::check::curve_suite::{self, CurveBounds};
use schurtau_core::check::schur_suite::{self, SchurBounds, NS_TYPES};
use schurtau_core::check::tau_suite::{self, TauBounds};
use schurtau_core::check::Case;
use schurtau_core::rational::int;
use schurtau_core::schur::{derive, derive_at, parse_points, render_points, schur_t};
use schurtau_core::tau::{random_tau, tau_eval_full};
use schurtau_core::{CurveModel, DerivationIndex, GapSequence, Partition};

use crate::format::{self, CurveFile, TauFile};
use crate::runner::{self, Format, RunOptions};

#[derive(Debug, Parser)]
#[command(name = "schurtau", version, about = "Exact Schur and tau derivatives at [x] points")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the constants table of a gap sequence.
    Constants(ConstantsArgs),
    /// Run a verification suite; exits 1 if any case fails.
    Verify(VerifyArgs),
    /// Print `∂^α s_λ`, optionally at a list of signed points.
    Schur(SchurArgs),
    /// Emit, evaluate or check a truncated tau series.
    Tau(TauArgs),
    /// Expand an (n,s) curve at infinity and print its differentials.
    Curve(CurveArgs),
}

/// An `(n, s)` pair written `n,s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NsType(pub u32, pub u32);

fn parse_ns(text: &str) -> Result<NsType, String> {
    let (n, s) = text
        .split_once(',')
        .ok_or_else(|| format!("expected n,s, found {text:?}"))?;
    let n = n.trim().parse().map_err(|_| format!("bad n in {text:?}"))?;
    let s = s.trim().parse().map_err(|_| format!("bad s in {text:?}"))?;
    Ok(NsType(n, s))
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    text.parse().map_err(|e| format!("{e}"))
}

fn parse_alpha(text: &str) -> Result<DerivationIndex, String> {
    text.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
pub struct GapSource {
    /// Gaps, e.g. `1,2,3,7`.
    #[arg(long)]
    pub gaps: Option<String>,
    /// Semigroup generators, e.g. `2,5`.
    #[arg(long, value_parser = parse_ns)]
    pub ns: Option<NsType>,
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    #[command(flatten)]
    pub source: GapSource,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Schur,
    Tau,
    Curve,
    All,
}

impl SuiteArg {
    fn name(self) -> &'static str {
        match self {
            SuiteArg::Schur => "schur",
            SuiteArg::Tau => "tau",
            SuiteArg::Curve => "curve",
            SuiteArg::All => "all",
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteArg,
    /// Largest |λ| in the Schur suite.
    #[arg(long, default_value_t = 8)]
    pub max_weight: u32,
    /// Largest genus of gap sequences [default: 6 for schur, 4 for tau].
    #[arg(long)]
    pub genus: Option<usize>,
    /// Largest number of points k [default: 3].
    #[arg(long)]
    pub k: Option<usize>,
    /// Random tau series per base partition and coefficient sets per curve.
    #[arg(long, default_value_t = 3)]
    pub seeds: u32,
    /// Curve expansions are computed modulo z^prec.
    #[arg(long, default_value_t = 16)]
    pub prec: i64,
    /// Tau cutoff above the base, W = |λ| + cutoff.
    #[arg(long, default_value_t = 6)]
    pub cutoff: u32,
    /// Top-level seed; every random input is derived from it.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// (n,s) types for the Schur and curve suites; repeatable.
    #[arg(long, value_parser = parse_ns)]
    pub ns: Vec<NsType>,
    /// Worker threads [default: number of CPUs].
    #[arg(long, env = "SCHURTAU_JOBS")]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Record per-case wall time (output is then not reproducible).
    #[arg(long)]
    pub timing: bool,
}

impl VerifyArgs {
    /// Defaults for `suite`, as if no option were given.
    pub fn new(suite: SuiteArg) -> Self {
        VerifyArgs {
            suite,
            max_weight: 8,
            genus: None,
            k: None,
            seeds: 3,
            prec: 16,
            cutoff: 6,
            seed: 0,
            ns: Vec::new(),
            jobs: None,
            format: Format::Json,
            timing: false,
        }
    }

    fn ns_types(&self) -> Vec<(u32, u32)> {
        if self.ns.is_empty() {
            NS_TYPES.to_vec()
        } else {
            self.ns.iter().map(|t| (t.0, t.1)).collect()
        }
    }

    pub fn schur_bounds(&self) -> SchurBounds {
        let d = SchurBounds::default();
        let k = self.k.unwrap_or(d.max_points);
        SchurBounds {
            max_weight: self.max_weight,
            max_genus: self.genus.unwrap_or(d.max_genus),
            ns_types: self.ns_types(),
            max_points: k,
            oracle_points: d.oracle_points.max(k),
            route_weight: d.route_weight.min(self.max_weight),
            ..d
        }
    }

    pub fn tau_bounds(&self) -> TauBounds {
        let d = TauBounds::default();
        TauBounds {
            max_genus: self.genus.unwrap_or(d.max_genus),
            seeds: self.seeds,
            extra_weight: self.cutoff,
            max_points: self.k.unwrap_or(d.max_points),
            top_seed: self.seed,
            ..d
        }
    }

    pub fn curve_bounds(&self) -> CurveBounds {
        CurveBounds {
            ns_types: self.ns_types(),
            coefficient_sets: self.seeds,
            precision: self.prec,
            top_seed: self.seed,
        }
    }

    pub fn cases(&self) -> Vec<Case> {
        let mut out = Vec::new();
        if matches!(self.suite, SuiteArg::Schur | SuiteArg::All) {
            out.extend(schur_suite::cases(&self.schur_bounds()));
        }
        if matches!(self.suite, SuiteArg::Tau | SuiteArg::All) {
            out.extend(tau_suite::cases(&self.tau_bounds()));
        }
        if matches!(self.suite, SuiteArg::Curve | SuiteArg::All) {
            out.extend(curve_suite::cases(&self.curve_bounds()));
        }
        out
    }

    /// The settings that determine the output; the worker count is not one.
    pub fn config(&self) -> Value {
        let ns: Vec<String> = self.ns_types().iter().map(|(n, s)| format!("{n},{s}")).collect();
        let s = self.schur_bounds();
        let t = self.tau_bounds();
        json!({
            "suite": self.suite.name(),
            "max_weight": self.max_weight,
            "schur_genus": s.max_genus,
            "tau_genus": t.max_genus,
            "k": s.max_points,
            "seeds": self.seeds,
            "prec": self.prec,
            "cutoff": self.cutoff,
            "seed": self.seed,
            "ns": ns,
        })
    }

    pub fn options(&self) -> RunOptions {
        RunOptions {
            jobs: self.jobs.unwrap_or_else(runner::default_jobs),
            format: self.format,
            timing: self.timing,
        }
    }
}

#[derive(Debug, Args)]
pub struct SchurArgs {
    #[arg(long, value_parser = parse_partition)]
    pub partition: Partition,
    /// Signed points such as `+x1,-x2` or `x1,1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub at: Option<String>,
    /// Derivative such as `1^3,2`; `0` for none.
    #[arg(long, value_parser = parse_alpha)]
    pub alpha: Option<DerivationIndex>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TauArgs {
    /// Read the series from a JSON file.
    #[arg(long, conflicts_with = "partition")]
    pub tau: Option<PathBuf>,
    /// Draw a random series over this base.
    #[arg(long, value_parser = parse_partition, required_unless_present = "tau")]
    pub partition: Option<Partition>,
    /// Seed of the random series.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Absolute weight cutoff W [default: |λ| + 6].
    #[arg(long)]
    pub cutoff: Option<u32>,
    /// Evaluate `∂^α τ` at `--at` instead of printing the series.
    #[arg(long, value_parser = parse_alpha)]
    pub alpha: Option<DerivationIndex>,
    #[arg(long, allow_hyphen_values = true)]
    pub at: Option<String>,
    /// Run every tau check on this series.
    #[arg(long, conflicts_with_all = ["alpha", "at"])]
    pub replay: bool,
    /// Largest number of points in replayed checks.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, env = "SCHURTAU_JOBS")]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long, value_parser = parse_ns, required_unless_present = "curve")]
    pub ns: Option<NsType>,
    /// Read the curve from a JSON file.
    #[arg(long, conflicts_with_all = ["ns", "seed"])]
    pub curve: Option<PathBuf>,
    /// Fill every coefficient at random from this seed; without it the
    /// curve is `y^n = x^s`.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 16)]
    pub prec: i64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

/// Runs a command, writing to `out`; returns the process exit code.
pub fn dispatch<W: Write>(cli: Cli, out: &mut W) -> Result<i32> {
    match cli.command {
        Command::Constants(a) => constants(&a, out),
        Command::Verify(a) => verify(&a, out),
        Command::Schur(a) => schur(&a, out),
        Command::Tau(a) => tau(&a, out),
        Command::Curve(a) => curve(&a, out),
    }
}

pub fn constants<W: Write>(a: &ConstantsArgs, out: &mut W) -> Result<i32> {
    let gaps = match (&a.source.gaps, a.source.ns) {
        (Some(text), _) => {
            let mut values = Vec::new();
            for piece in text.split(',') {
                let v: u32 = piece
                    .trim()
                    .parse()
                    .with_context(|| format!("bad gap {piece:?}"))?;
                values.push(v);
            }
            GapSequence::from_gaps(&values)?
        }
        (None, Some(NsType(n, s))) => GapSequence::from_ns(n, s)?,
        (None, None) => bail!("one of --gaps or --ns is required"),
    };
    let table = gaps.constants();
    match a.format {
        Format::Text => write!(out, "{}", format::constants_text(&table))?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&format::constants(&table))?)?,
    }
    Ok(0)
}

pub fn verify<W: Write>(a: &VerifyArgs, out: &mut W) -> Result<i32> {
    let cases = a.cases();
    let outcome = runner::run(&cases, &a.options(), a.config(), out)?;
    Ok(exit_code(&outcome))
}

fn exit_code(outcome: &runner::Outcome) -> i32 {
    match &outcome.first_failure {
        None => 0,
        Some(r) => {
            eprintln!(
                "first failure: {}/{} {}: {}",
                r.suite,
                r.check,
                r.case,
                r.witness.as_deref().or(r.note.as_deref()).unwrap_or("no witness")
            );
            1
        }
    }
}

fn points(text: &Option<String>) -> Result<Option<Vec<schurtau_core::SignedPoint>>> {
    text.as_deref()
        .map(parse_points)
        .transpose()
        .context("--at")
}

pub fn schur<W: Write>(a: &SchurArgs, out: &mut W) -> Result<i32> {
    let alpha = a.alpha.clone().unwrap_or_else(DerivationIndex::none);
    let pts = points(&a.at)?;
    let value = match &pts {
        Some(p) => derive_at(&a.partition, &alpha, p),
        None => derive(&schur_t(&a.partition), &alpha),
    };
    match a.format {
        Format::Text => writeln!(out, "{value}")?,
        Format::Json => {
            let v = json!({
                "partition": a.partition.parts(),
                "alpha": alpha.to_string(),
                "at": pts.as_deref().map(render_points),
                "value": value.to_string(),
            });
            writeln!(out, "{v}")?;
        }
    }
    Ok(0)
}

pub fn tau<W: Write>(a: &TauArgs, out: &mut W) -> Result<i32> {
    let series = match (&a.tau, &a.partition) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let file: TauFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            file.to_series()?
        }
        (None, Some(base)) => {
            let cutoff = a.cutoff.unwrap_or(base.weight() + 6);
            random_tau(base, cutoff, a.seed)?
        }
        (None, None) => bail!("one of --tau or --partition is required"),
    };
    if a.replay {
        let cases = tau_suite::series_cases(&series, a.k);
        let opts = RunOptions {
            jobs: a.jobs.unwrap_or_else(runner::default_jobs),
            format: a.format,
            timing: false,
        };
        let config = json!({ "replay": format::TauFile::from_series(&series), "k": a.k });
        let outcome = runner::run(&cases, &opts, config, out)?;
        return Ok(exit_code(&outcome));
    }
    if a.alpha.is_some() || a.at.is_some() {
        let alpha = a.alpha.clone().unwrap_or_else(DerivationIndex::none);
        let pts = points(&a.at)?.unwrap_or_default();
        let e = tau_eval_full(&series, &alpha, &pts);
        match a.format {
            Format::Text => writeln!(out, "{} + O(degree > {})", e.certified(), e.valid_degree)?,
            Format::Json => {
                let v = json!({
                    "alpha": alpha.to_string(),
                    "at": render_points(&pts),
                    "valid_degree": e.valid_degree,
                    "value": e.certified().to_string(),
                });
                writeln!(out, "{v}")?;
            }
        }
        return Ok(0);
    }
    let file = TauFile::from_series(&series);
    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&file)?)?,
        Format::Text => {
            writeln!(out, "base {} cutoff {}", series.base(), series.cutoff())?;
            for (mu, xi) in series.terms() {
                writeln!(out, "{mu:<16} {xi}")?;
            }
        }
    }
    Ok(0)
}

pub fn curve<W: Write>(a: &CurveArgs, out: &mut W) -> Result<i32> {
    let model = match (&a.curve, a.ns) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let file: CurveFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            file.to_model()?
        }
        (None, Some(NsType(n, s))) => match a.seed {
            Some(seed) => CurveModel::random(n, s, seed)?,
            None => CurveModel::new(n, s)?,
        },
        (None, None) => bail!("one of --curve or --ns is required"),
    };
    let data = model.expand_y(a.prec);
    let residual = model.residual(&data);
    let diffs = model.differentials(a.prec)?;
    let gaps = model.gap_sequence();
    let residual_ok = residual.is_zero() && residual.precision() >= a.prec;
    let leading_ok = diffs.iter().all(|d| {
        d.valuation() == Some(i64::from(d.gap) - 1) && d.leading().is_some_and(|c| *c == int(1))
    });
    match a.format {
        Format::Json => {
            let ds: Vec<Value> = diffs
                .iter()
                .map(|d| {
                    json!({
                        "gap": d.gap,
                        "valuation": d.valuation(),
                        "leading": d.leading().map(format::rational),
                        "series": format::series(&d.series),
                    })
                })
                .collect();
            let v = json!({
                "curve": CurveFile::from_model(&model),
                "genus": gaps.genus(),
                "gaps": gaps.gaps(),
                "precision": a.prec,
                "y": format::series(&data.y),
                "residual": { "zero": residual.is_zero(), "precision": residual.precision() },
                "differentials": ds,
                "leading_ok": leading_ok,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
        Format::Text => {
            writeln!(out, "(n,s) = ({},{}), genus {}, gaps {}", model.n(), model.s(), gaps.genus(), gaps)?;
            writeln!(out, "y = {}", data.y)?;
            writeln!(out, "residual {}", if residual_ok { "zero" } else { "NONZERO" })?;
            for d in &diffs {
                writeln!(out, "du_{}/dz = {}", d.gap, d.series)?;
            }
        }
    }
    Ok(if residual_ok && leading_ok { 0 } else { 1 })
}
