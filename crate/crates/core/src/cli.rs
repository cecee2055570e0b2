//! `lisa-kit` command-line front end.
//!
//! Exit codes: 0 success, 1 a claimed relation unexpectedly held, 2 input or
//! usage error, 3 validation error, 4 an identity failed.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{Analysis, Dataset};
use crate::error::Error;
use crate::fixtures::{self, CensusYear};
use crate::io::{read_distances, read_values, write_file};
use crate::matrices::Kernel;
use crate::output::{render_csv, render_json, render_text, Variants};
use crate::plot::plot_data;
use crate::verification::{full_report, random_instance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_HELD: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_IDENTITY: i32 = 4;

pub const PRECISION_ENV: &str = "LISA_KIT_PRECISION";
const DEFAULT_PRECISION: usize = 4;

#[derive(Debug, Parser)]
#[command(name = "lisa-kit", version, about = "Global and local Moran's I / Geary's C in three formulations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute all local and global statistics and print the LISA table
    Compute(RunConfig),
    /// Run the identity suite and the refutation audit
    Verify(RunConfig),
    /// Emit MI1-vs-MI2 and MI1-vs-MI3 scatter data (and optionally SVG)
    Plot(RunConfig),
    /// Write the bundled Beijing-Tianjin-Hebei CSV files into --out (a directory)
    Demo(RunConfig),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DemoSet {
    Bth2000,
    Bth2010,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Distance matrix CSV (`id,<label1>,...`)
    #[arg(long)]
    pub distances: Option<PathBuf>,
    /// Attribute CSV (`id,value` or `id,<col1>,...`)
    #[arg(long)]
    pub values: Option<PathBuf>,
    /// Attribute column to use; defaults to the first value column
    #[arg(long)]
    pub column: Option<String>,
    /// inverse | power:B | threshold:R
    #[arg(long, default_value = "inverse")]
    pub kernel: Kernel,
    /// all, or a comma list of set1,set2,set3
    #[arg(long, default_value = "all")]
    pub variants: Variants,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Output path (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// SVG output path for the plot command
    #[arg(long)]
    pub plot: Option<PathBuf>,
    /// Use a bundled dataset instead of CSV input
    #[arg(long, value_enum)]
    pub demo: Option<DemoSet>,
    /// Synthetic dataset, e.g. `--random n=6 seed=9`
    #[arg(long, num_args = 1..=2, value_names = ["n=N", "seed=S"])]
    pub random: Vec<String>,
}

/// Echo of the run configuration in JSON output.
#[derive(Debug, Serialize)]
struct ConfigEcho<'a> {
    source: String,
    distances: Option<&'a Path>,
    values: Option<&'a Path>,
    column: Option<&'a str>,
    kernel: String,
    variants: Variants,
    format: Format,
}

impl RunConfig {
    fn echo(&self, source: &str) -> ConfigEcho<'_> {
        ConfigEcho {
            source: source.to_string(),
            distances: self.distances.as_deref(),
            values: self.values.as_deref(),
            column: self.column.as_deref(),
            kernel: self.kernel.to_string(),
            variants: self.variants,
            format: self.format,
        }
    }
}

/// Failure with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() {
            EXIT_INPUT
        } else {
            EXIT_VALIDATION
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

/// Parses `n=N seed=S` (space or comma separated, seed optional).
pub fn parse_random_spec(tokens: &[String]) -> Result<(usize, u64), String> {
    let mut n = None;
    let mut seed = 0;
    for tok in tokens.iter().flat_map(|t| t.split([',', ' '])).filter(|t| !t.is_empty()) {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got `{tok}`"))?;
        match key {
            "n" => n = Some(value.parse().map_err(|_| format!("bad n `{value}`"))?),
            "seed" => seed = value.parse().map_err(|_| format!("bad seed `{value}`"))?,
            _ => return Err(format!("unknown key `{key}`")),
        }
    }
    let n = n.ok_or("missing n=N")?;
    if n < 3 {
        return Err(format!("random instances need n >= 3, got {n}"));
    }
    Ok((n, seed))
}

/// Resolves the input dataset and a short description of where it came from.
pub fn load_dataset(cfg: &RunConfig) -> Result<(Dataset, String), Failure> {
    let sources = [cfg.demo.is_some(), !cfg.random.is_empty(), cfg.distances.is_some() || cfg.values.is_some()];
    if sources.iter().filter(|s| **s).count() != 1 {
        return Err(usage(
            "specify exactly one input: --demo, --random, or --distances with --values",
        ));
    }
    if let Some(demo) = cfg.demo {
        let bth = fixtures::load_bth();
        let (year, name) = match demo {
            DemoSet::Bth2000 => (CensusYear::Y2000, "bth2000"),
            DemoSet::Bth2010 => (CensusYear::Y2010, "bth2010"),
        };
        let ds = Dataset::new(name, bth.distances.clone(), bth.population(year).clone(), cfg.kernel)?;
        return Ok((ds, format!("demo:{name}")));
    }
    if !cfg.random.is_empty() {
        let (n, seed) = parse_random_spec(&cfg.random).map_err(usage)?;
        let ds = random_instance(n, seed)?.with_kernel(cfg.kernel)?;
        return Ok((ds, format!("random:n={n},seed={seed}")));
    }
    let (Some(dpath), Some(vpath)) = (&cfg.distances, &cfg.values) else {
        return Err(usage("--distances and --values must be given together"));
    };
    let distances = read_distances(dpath)?;
    let values = read_values(vpath, cfg.column.as_deref())?;
    let ds = Dataset::new("csv", distances, values, cfg.kernel)?;
    Ok((ds, "csv".to_string()))
}

fn emit(cfg: &RunConfig, body: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &cfg.out {
        Some(path) => write_file(path, body).map_err(Failure::from),
        None => stdout
            .write_all(body.as_bytes())
            .map_err(|e| usage(format!("stdout: {e}"))),
    }
}

fn cmd_compute(cfg: &RunConfig, precision: usize, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let (ds, source) = load_dataset(cfg)?;
    let a = Analysis::run(&ds)?;
    let body = match cfg.format {
        Format::Csv => render_csv(&a, cfg.variants),
        Format::Text => render_text(&a, cfg.variants, precision),
        Format::Json => {
            let report = full_report(&a)?;
            render_json(&a, cfg.variants, &cfg.echo(&source), &report.checks)
        }
    };
    emit(cfg, &body, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_verify(cfg: &RunConfig, precision: usize, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let (ds, source) = load_dataset(cfg)?;
    let a = Analysis::run(&ds)?;
    let report = full_report(&a)?;
    let body = match cfg.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => format!("dataset: {source}\n{}", report.to_text(precision)),
        Format::Csv => {
            let mut s = String::from("id,kind,lhs,rhs,abs_gap,rel_gap,tolerance,verdict\n");
            for c in &report.checks {
                let kind = serde_json::to_value(c.kind).expect("kind");
                let verdict = serde_json::to_value(c.verdict).expect("verdict");
                s.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    c.id,
                    kind.as_str().unwrap_or_default(),
                    c.lhs,
                    c.rhs,
                    c.abs_gap,
                    c.rel_gap,
                    c.tolerance,
                    verdict.as_str().unwrap_or_default()
                ));
            }
            s
        }
    };
    emit(cfg, &body, stdout)?;
    Ok(if !report.identities_hold() {
        EXIT_IDENTITY
    } else if !report.claims_refuted() {
        EXIT_CLAIM_HELD
    } else {
        EXIT_OK
    })
}

fn cmd_plot(cfg: &RunConfig, precision: usize, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let (ds, _) = load_dataset(cfg)?;
    let a = Analysis::run(&ds)?;
    let data = plot_data(&a);
    let body = match cfg.format {
        Format::Csv => data.to_csv(),
        Format::Json => data.to_json(),
        Format::Text => data.to_text(precision),
    };
    emit(cfg, &body, stdout)?;
    if let Some(svg) = &cfg.plot {
        write_file(svg, &data.to_svg())?;
    }
    Ok(EXIT_OK)
}

fn cmd_demo(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let dir = cfg.out.clone().unwrap_or_else(|| PathBuf::from("."));
    let (d, p) = fixtures::export_csv(&dir)?;
    writeln!(stdout, "wrote {}\nwrote {}", d.display(), p.display())
        .map_err(|e| usage(format!("stdout: {e}")))?;
    Ok(EXIT_OK)
}

/// Precision for text output, from `LISA_KIT_PRECISION` when set.
pub fn precision_from_env() -> usize {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_PRECISION)
}

/// Runs one invocation and returns its exit code.
pub fn run_with<I, T>(args: I, precision: usize, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute(cfg) => cmd_compute(cfg, precision, stdout),
        Command::Verify(cfg) => cmd_verify(cfg, precision, stdout),
        Command::Plot(cfg) => cmd_plot(cfg, precision, stdout),
        Command::Demo(cfg) => cmd_demo(cfg, stdout),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        std::env::args_os(),
        precision_from_env(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
