//! Subcommands of the `speyer` binary.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use speyer_core::gamma::gamma_recur;
use speyer_core::gpoly::{g_poly, h_recur, GIndex};
use speyer_core::poly::TermOrder;
use speyer_core::report::{diff, VerificationReport};
use speyer_core::stats::NormalityStats;
use speyer_core::{parse_rational, Rational};
use thiserror::Error;

use crate::config::{ConfigError, Format, Overrides, RunConfig};
use crate::suites;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed report {path}: {source}")]
    Malformed {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Compute(speyer_core::Error),
}

impl CliError {
    /// 2 for anything wrong with the input, 1 for failures while computing.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Compute(_) => 1,
            _ => 2,
        }
    }
}

/// Index and domain errors stem from user input.
fn input(e: speyer_core::Error) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "speyer", version, about = "Exact computations and checks for g-polynomials of uniform matroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print g_{n,d}(t), or every g_{n,d} for d = 1..n-1.
    Gpoly {
        n: Option<i64>,
        d: Option<i64>,
        #[arg(long = "n", id = "n_flag")]
        n_flag: Option<i64>,
        #[arg(long = "d", id = "d_flag")]
        d_flag: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print h_n(x; t), or h_n(x; t0) with --t.
    Hpoly {
        n: Option<i64>,
        #[arg(long = "n", id = "n_flag")]
        n_flag: Option<i64>,
        #[arg(long)]
        t: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the gamma vector of h_n, symbolic in t or at --t.
    Gamma {
        n: Option<i64>,
        #[arg(long = "n", id = "n_flag")]
        n_flag: Option<i64>,
        #[arg(long)]
        t: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run verification suites and emit a report.
    Verify(RunArgs),
    /// Moments and normal-approximation distances over the grid.
    Stats(RunArgs),
    /// List entries whose status differs between two JSON reports.
    ReportDiff { a: PathBuf, b: PathBuf },
}

#[derive(Debug, Default, Args)]
pub struct RunArgs {
    /// Shorthand for --n-min N --n-max N.
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub n_min: Option<i64>,
    #[arg(long)]
    pub n_max: Option<i64>,
    /// Grid value of t as p/q; repeatable or comma separated.
    #[arg(long)]
    pub t: Vec<String>,
    /// Number of iterates for k-log-concavity.
    #[arg(long)]
    pub depth: Option<usize>,
    /// Largest Laguerre order in the conjecture sweep.
    #[arg(long)]
    pub r_max: Option<usize>,
    /// Comma-separated suite ids.
    #[arg(long)]
    pub suites: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// JSON file with the same settings; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Record per-entry wall time (makes reports non-reproducible).
    #[arg(long)]
    pub timings: bool,
}

impl RunArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            n: self.n,
            n_min: self.n_min,
            n_max: self.n_max,
            t: (!self.t.is_empty()).then(|| self.t.clone()),
            depth: self.depth,
            r_max: self.r_max,
            suites: self.suites.as_ref().map(|s| vec![s.clone()]),
            format: self.format,
            out: self.out.clone(),
            jobs: self.jobs,
            timings: self.timings.then_some(true),
        }
    }

    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        let file = self.config.as_deref().map(Overrides::from_file).transpose()?;
        Ok(RunConfig::resolve(file.as_ref(), &self.overrides())?)
    }
}

/// What a command produced: text for stdout (or a file) and the exit status.
pub struct Outcome {
    pub output: String,
    pub out: Option<PathBuf>,
    pub code: u8,
    pub notes: Vec<String>,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            out: None,
            code: 0,
            notes: Vec::new(),
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Gpoly { n, d, n_flag, d_flag, format } => {
            let n = pick(*n, *n_flag, "n")?;
            cmd_gpoly(n, d.or(*d_flag), *format).map(Outcome::ok)
        }
        Command::Hpoly { n, n_flag, t, format } => cmd_hpoly(pick(*n, *n_flag, "n")?, t.as_deref(), *format),
        Command::Gamma { n, n_flag, t, format } => cmd_gamma(pick(*n, *n_flag, "n")?, t.as_deref(), *format),
        Command::Verify(args) => cmd_verify(&args.resolve()?),
        Command::Stats(args) => cmd_stats(&args.resolve()?),
        Command::ReportDiff { a, b } => cmd_report_diff(a, b).map(Outcome::ok),
    }
}

fn pick(pos: Option<i64>, flag: Option<i64>, name: &str) -> Result<i64, CliError> {
    match (pos, flag) {
        (Some(a), Some(b)) if a != b => Err(CliError::Usage(format!("conflicting values for {name}: {a} and {b}"))),
        (Some(v), _) | (None, Some(v)) => Ok(v),
        (None, None) => Err(CliError::Usage(format!("missing {name}"))),
    }
}

fn parse_t(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(input)
}

fn t_warning(t: &Rational) -> Option<String> {
    (*t <= Rational::from_integer(0.into()))
        .then(|| format!("warning: t = {t}; the real-rootedness and positivity results assume t > 0"))
}

fn coeff_strings(p: &speyer_core::UniPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn cmd_gpoly(n: i64, d: Option<i64>, format: Format) -> Result<String, CliError> {
    let ds: Vec<i64> = match d {
        Some(d) => vec![d],
        None => {
            if n < 2 {
                return Err(input(speyer_core::Error::InvalidIndex { n, d: 1 }));
            }
            (1..n).collect()
        }
    };
    let polys = ds
        .iter()
        .map(|&d| GIndex::new(n, d).map(|i| (d, g_poly(i))))
        .collect::<Result<Vec<_>, _>>()
        .map_err(input)?;
    let single = d.is_some();
    let render = |p: &speyer_core::UniPoly| p.render("t", TermOrder::Descending);
    Ok(match format {
        Format::Text if single => format!("{}\n", render(&polys[0].1)),
        Format::Text => polys.iter().fold(String::new(), |mut s, (d, p)| {
            let _ = writeln!(s, "g[{n},{d}] = {}", render(p));
            s
        }),
        Format::Json => {
            let rows: Vec<serde_json::Value> = polys
                .iter()
                .map(|(d, p)| serde_json::json!({"n": n, "d": d, "poly": render(p), "coeffs": coeff_strings(p)}))
                .collect();
            let v = if single { rows[0].clone() } else { serde_json::Value::Array(rows) };
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => polys.iter().fold(String::from("n,d,poly\n"), |mut s, (d, p)| {
            let _ = writeln!(s, "{n},{d},{}", render(p));
            s
        }),
    })
}

pub fn cmd_hpoly(n: i64, t: Option<&str>, format: Format) -> Result<Outcome, CliError> {
    let h = h_recur(n).map_err(input)?;
    let mut notes = Vec::new();
    let (text, coeffs) = match t {
        Some(t) => {
            let t = parse_t(t)?;
            notes.extend(t_warning(&t));
            let p = h.eval_t(&t);
            (p.render("x", TermOrder::Ascending), serde_json::to_value(&p).expect("json"))
        }
        None => (h.to_string(), serde_json::to_value(&h).expect("json")),
    };
    let output = match format {
        Format::Text => format!("{text}\n"),
        Format::Json => {
            let v = serde_json::json!({"n": n, "t": t, "poly": text, "coeffs": coeffs});
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => format!("n,t,poly\n{n},{},{text}\n", t.unwrap_or("")),
    };
    Ok(Outcome { notes, ..Outcome::ok(output) })
}

pub fn cmd_gamma(n: i64, t: Option<&str>, format: Format) -> Result<Outcome, CliError> {
    let g = gamma_recur(n).map_err(input)?;
    let mut notes = Vec::new();
    let shown: Vec<String> = match t {
        Some(t) => {
            let t = parse_t(t)?;
            notes.extend(t_warning(&t));
            g.at(&t).iter().map(|v| v.to_string()).collect()
        }
        None => g.gammas().iter().map(|p| p.render("t", TermOrder::Descending)).collect(),
    };
    let output = match format {
        Format::Text => shown.iter().enumerate().fold(String::new(), |mut s, (i, v)| {
            let _ = writeln!(s, "gamma[{n},{i}] = {v}");
            s
        }),
        Format::Json => {
            let v = match t {
                Some(_) => serde_json::to_value(&shown).expect("json"),
                None => serde_json::to_value(&g).expect("json"),
            };
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => shown.iter().enumerate().fold(String::from("n,i,gamma\n"), |mut s, (i, v)| {
            let _ = writeln!(s, "{n},{i},{v}");
            s
        }),
    };
    Ok(Outcome { notes, ..Outcome::ok(output) })
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let report = suites::run(cfg).map_err(CliError::Compute)?;
    let output = match cfg.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    let notes = report
        .failures()
        .map(|e| format!("FAIL {}", e.key()))
        .collect();
    Ok(Outcome {
        output,
        out: cfg.out.clone(),
        code: if report.all_pass() { 0 } else { 1 },
        notes,
    })
}

pub fn cmd_stats(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let grid: Vec<(i64, &Rational)> = (cfg.n_min.max(3)..=cfg.n_max)
        .flat_map(|n| cfg.t_grid.iter().map(move |t| (n, t)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Compute(speyer_core::Error::Internal(e.to_string())))?;
    let rows: Vec<NormalityStats> = pool
        .install(|| grid.par_iter().map(|(n, t)| NormalityStats::compute(*n, t)).collect::<Result<_, _>>())
        .map_err(CliError::Compute)?;
    let output = match cfg.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&rows).expect("json")),
        Format::Csv => rows.iter().fold(format!("{}\n", NormalityStats::CSV_HEADER), |mut s, r| {
            let _ = writeln!(s, "{}", r.csv_row());
            s
        }),
        Format::Text => {
            let mut s = format!("{:>4} {:>6} {:>10} {:>12} {:>12} {:>12}\n", "n", "t", "mean", "variance", "clt", "llt");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>4} {:>6} {:>10} {:>12.6} {:>12.6e} {:>12.6e}",
                    r.n,
                    r.t,
                    r.mean,
                    speyer_core::stats::to_f64(&r.variance),
                    r.clt_dist,
                    r.llt_dist
                );
            }
            s
        }
    };
    Ok(Outcome {
        out: cfg.out.clone(),
        ..Outcome::ok(output)
    })
}

fn read_report(path: &Path) -> Result<VerificationReport, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    VerificationReport::from_json(&text).map_err(|source| CliError::Malformed {
        path: path.to_path_buf(),
        source,
    })
}

pub fn cmd_report_diff(a: &Path, b: &Path) -> Result<String, CliError> {
    let changes = diff(&read_report(a)?, &read_report(b)?);
    let label = |s: Option<bool>| match s {
        Some(true) => "pass",
        Some(false) => "fail",
        None => "absent",
    };
    let mut out = String::new();
    for c in &changes {
        let _ = writeln!(out, "{}: {} -> {}", c.key, label(c.before), label(c.after));
    }
    let noun = if changes.len() == 1 { "difference" } else { "differences" };
    let _ = writeln!(out, "{} {noun}", changes.len());
    Ok(out)
}

/// Writes the outcome and returns the process exit status.
pub fn emit(outcome: &Outcome) -> Result<u8, CliError> {
    for n in &outcome.notes {
        eprintln!("{n}");
    }
    match &outcome.out {
        Some(path) => std::fs::write(path, &outcome.output).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?,
        None => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(outcome.output.as_bytes());
        }
    }
    Ok(outcome.code)
}
