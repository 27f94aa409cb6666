//! The `weyltrop` command line: argument parsing, shape resolution and the
//! subcommands. Reports are JSON lines, tables are CSV.

mod commands;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::birational::ParamModel;
use crate::lattice::ShapeConfig;

const GRAMMAR: &str = "Words are generator tokens separated by spaces or commas: \
s<n>.<i> (or s<n> for i = 0), pi, iota, r0, r1. The rightmost letter acts first on classes.\n\
Presets: aN is A_N^(1) (N+1 nodes, k = l = 1); dN is the frozen D shape with N nodes.\n\
Exit codes: 0 all checks pass, 1 some check fails or a runtime error, 2 configuration error.\n\
WEYLTROP_THREADS caps the number of worker threads.";

#[derive(Parser, Debug)]
#[command(name = "weyltrop", version, about = "Tropical Weyl group actions, tau functions and q-Painleve checks")]
#[command(args_override_self = true, after_help = GRAMMAR)]
pub struct Cli {
    #[command(flatten)]
    pub run: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Named shape: aN or dN.
    #[arg(long, global = true)]
    pub preset: Option<String>,
    /// Number of nodes; with --k/--l gives a general shape.
    #[arg(long = "N", global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, value_delimiter = ',')]
    pub k: Option<Vec<u32>>,
    #[arg(long, global = true, value_delimiter = ',')]
    pub l: Option<Vec<u32>>,
    #[arg(long, global = true, default_value_t = 4)]
    pub max_word_len: usize,
    #[arg(long, global = true, default_value_t = 8)]
    pub iters: usize,
    #[arg(long, global = true, default_value = "1/2", value_parser = parse_ratio)]
    pub q: (i64, i64),
    #[arg(long, global = true, default_value = "3/4", value_parser = parse_ratio)]
    pub b0: (i64, i64),
    /// Must equal q/b0 when given.
    #[arg(long, global = true, value_parser = parse_ratio)]
    pub b1: Option<(i64, i64)>,
    #[arg(long, global = true, default_value = "2/3", value_parser = parse_ratio)]
    pub c: (i64, i64),
    /// Working precision in bits.
    #[arg(long, global = true, default_value_t = 200)]
    pub precision: usize,
    #[arg(long, global = true, default_value_t = 1e-20)]
    pub tolerance: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// key=value file with defaults for the flags above.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Include per-check timings in reports (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CharMode {
    Schur,
    Uc,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Lattice, birational and min-plus relation suites.
    VerifyRelations {
        #[arg(long, default_value_t = 200)]
        words: usize,
        #[arg(long, default_value_t = 12)]
        word_len: usize,
        #[arg(long, default_value_t = 1000)]
        points: usize,
    },
    /// τ of w.E_n^i with its certificate and defining polynomial.
    Tau {
        #[arg(default_value = "")]
        word: String,
        /// Seed class E_n^i as n.i
        #[arg(long, default_value = "1.1")]
        base: String,
    },
    /// Orbit classes up to --max-word-len with their τ certificates.
    Orbit {
        #[arg(long)]
        with_tau: bool,
    },
    /// CSV of measured degrees, lattice bounds and second differences.
    DegreeGrowth {
        /// Translation word; defaults to the q-P(A) step on aN presets.
        #[arg(long)]
        word: Option<String>,
        /// Degrees are measured in this f variable.
        #[arg(long, default_value_t = 1)]
        var: u16,
    },
    /// The q-P(A) step and an exact rational orbit of --iters points.
    QpStep,
    /// Residual grid of the bilinear relation.
    CharCheck {
        #[arg(long, value_enum, default_value_t = CharMode::Schur)]
        mode: CharMode,
        #[arg(long, default_value_t = 2)]
        nu_radius: i64,
        #[arg(long, default_value_t = 2)]
        kappa_radius: i64,
        /// Also compare τ values of short words with the closed form.
        #[arg(long)]
        specialization: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Runtime(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            _ => 1,
        }
    }
}

pub fn runtime<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Runtime(e.to_string())
}

fn parse_ratio(s: &str) -> Result<(i64, i64), String> {
    let bad = || format!("`{s}` is not a ratio a/b");
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    if d == 0 {
        return Err(bad());
    }
    Ok((n, d))
}

/// The shape and whether it is the D preset.
#[derive(Clone, Debug)]
pub struct Shape {
    pub cfg: ShapeConfig,
    pub d_type: bool,
}

impl RunConfig {
    pub fn shape(&self) -> Result<Shape, CliError> {
        let cfg_err = |e: crate::lattice::LatticeError| CliError::Config(e.to_string());
        if let Some(p) = &self.preset {
            if self.n.is_some() || self.k.is_some() || self.l.is_some() {
                return Err(CliError::Config("--preset excludes --N, --k and --l".into()));
            }
            let bad = || CliError::Config(format!("unknown preset `{p}`"));
            let (kind, n) = p.split_at(1);
            let n: usize = n.parse().map_err(|_| bad())?;
            return match kind {
                "a" if n >= 2 => Ok(Shape { cfg: ShapeConfig::a(n + 1).map_err(cfg_err)?, d_type: false }),
                "d" => Ok(Shape { cfg: ShapeConfig::d(n).map_err(cfg_err)?, d_type: true }),
                _ => Err(bad()),
            };
        }
        match (self.n, &self.k, &self.l) {
            (None, None, None) => Ok(Shape { cfg: ShapeConfig::a(3).map_err(cfg_err)?, d_type: false }),
            (Some(n), None, None) => Ok(Shape { cfg: ShapeConfig::a(n).map_err(cfg_err)?, d_type: false }),
            (n, Some(k), Some(l)) => {
                if k.len() != l.len() || n.is_some_and(|n| n != k.len()) {
                    return Err(CliError::Config(format!(
                        "--k and --l must both have N entries (got {} and {})",
                        k.len(),
                        l.len()
                    )));
                }
                Ok(Shape { cfg: ShapeConfig::new(k.clone(), l.clone()).map_err(cfg_err)?, d_type: false })
            }
            _ => Err(CliError::Config("--k and --l must be given together".into())),
        }
    }

    /// The model for relation and τ checks: the D model on dN, the generic
    /// model otherwise.
    pub fn model(&self, shape: &Shape) -> Result<ParamModel, CliError> {
        if shape.d_type {
            ParamModel::d(shape.cfg.n()).map_err(|e| CliError::Config(e.to_string()))
        } else {
            Ok(ParamModel::generic(shape.cfg.clone()))
        }
    }

    pub fn check_b1(&self) -> Result<(), CliError> {
        if let Some((n, d)) = self.b1 {
            // b1 = q / b0
            let (qn, qd) = self.q;
            let (bn, bd) = self.b0;
            if n as i128 * qd as i128 * bn as i128 != d as i128 * qn as i128 * bd as i128 {
                return Err(CliError::Config("b1 must equal q/b0".into()));
            }
        }
        Ok(())
    }

    pub fn writer(&self) -> Result<Box<dyn Write>, CliError> {
        Ok(match &self.out {
            Some(p) => Box::new(io::BufWriter::new(File::create(p)?)),
            None => Box::new(io::BufWriter::new(io::stdout())),
        })
    }
}

fn with_config_file(args: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let pos = args.iter().position(|a| a == "--config" || a.to_string_lossy().starts_with("--config="));
    let Some(pos) = pos else { return Ok(args) };
    let a = args[pos].to_string_lossy().into_owned();
    let path = match a.strip_prefix("--config=") {
        Some(p) => p.to_string(),
        None => args
            .get(pos + 1)
            .map(|p| p.to_string_lossy().into_owned())
            .ok_or_else(|| CliError::Config("--config needs a path".into()))?,
    };
    let text = std::fs::read_to_string(&path).map_err(|e| CliError::Config(format!("{path}: {e}")))?;
    let mut out = vec![args[0].clone()];
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("{path}:{}: expected key=value", no + 1)))?;
        out.push(format!("--{}={}", k.trim().replace('_', "-"), v.trim()).into());
    }
    // flags given on the command line come later and win
    out.extend(args.into_iter().skip(1));
    Ok(out)
}

fn set_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("WEYLTROP_THREADS") {
        let n: usize = v.parse().map_err(|_| CliError::Config(format!("WEYLTROP_THREADS=`{v}`")))?;
        // a pool may already exist when called twice in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    Ok(())
}

/// Parses `args`, runs the subcommand and returns the exit code.
pub fn run(args: Vec<OsString>) -> i32 {
    let args = match with_config_file(args) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("weyltrop: {e}");
            return e.exit_code();
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = set_threads().and_then(|_| commands::dispatch(&cli));
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("weyltrop: {e}");
            e.exit_code()
        }
    }
}
