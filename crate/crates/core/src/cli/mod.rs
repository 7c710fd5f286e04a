//! Command-line front end: `certify`, `selftest`, `cross` and `norms`.
//!
//! Configuration is a flat `key=value` file (see [`config::KEYS`]) with
//! command-line overrides. Exit codes: 0 success, 1 failed self-test,
//! 2 invalid configuration, 3 unreadable or malformed input file.

pub mod config;
pub mod report;
pub mod selftest;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::norms::{weighted_lp_norm, Exponent};
use crate::schur::{certify, CertDirection};
use crate::transforms::{analyze, tensor_analysis};
pub use config::Config;
pub use report::{NormRow, NormTable, ReportDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFTEST: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "coorbit", version, about = "Coorbit kernel norms and boundedness reports")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify an operator between two coorbit spaces.
    Certify(Options),
    /// Run the invariant suite at the configured size.
    Selftest(Options),
    /// Certify an operator between an affine and a Weyl-Heisenberg coorbit space.
    Cross(Options),
    /// Norm tables of the operator kernel and an optional signal.
    Norms(Options),
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct Options {
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub operator: Option<String>,
    #[arg(long)]
    pub out: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub s2: Option<f64>,
    /// Any other configuration key, as KEY=VALUE.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub set: Vec<String>,
}

impl Options {
    pub fn resolve(&self) -> Result<Config> {
        let mut map = match &self.config {
            Some(path) => config::read_config_file(path)?,
            None => BTreeMap::new(),
        };
        for item in &self.set {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("expected KEY=VALUE, found '{item}'")))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        let overrides = [
            ("operator", self.operator.clone()),
            ("out", self.out.clone()),
            ("seed", self.seed.map(|s| s.to_string())),
            ("p", self.p.clone()),
            ("s1", self.s1.map(|s| s.to_string())),
            ("s2", self.s2.map(|s| s.to_string())),
        ];
        for (key, value) in overrides {
            if let Some(v) = value {
                map.insert(key.to_string(), v);
            }
        }
        Config::from_map(&map)
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) | Error::Parse { .. } => EXIT_IO,
        _ => EXIT_VALIDATION,
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
        }
    };
    let threads = std::env::var("COORBIT_NUM_THREADS").ok();
    let pool = match threads.as_deref().map(str::parse::<usize>) {
        None => rayon::ThreadPoolBuilder::new().build(),
        Some(Ok(n)) if n > 0 => rayon::ThreadPoolBuilder::new().num_threads(n).build(),
        Some(_) => {
            eprintln!("error: COORBIT_NUM_THREADS must be a positive integer");
            return EXIT_VALIDATION;
        }
    };
    let pool = match pool {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VALIDATION;
        }
    };
    pool.install(|| dispatch(&cli.command))
}

fn dispatch(command: &Command) -> i32 {
    let (name, options) = match command {
        Command::Certify(o) => ("certify", o),
        Command::Selftest(o) => ("selftest", o),
        Command::Cross(o) => ("cross", o),
        Command::Norms(o) => ("norms", o),
    };
    let config = match options.resolve() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    if name == "selftest" {
        return run_selftest(&config);
    }
    let started = Instant::now();
    let document = match name {
        "certify" => run_certify(&config),
        "cross" => run_cross(&config),
        _ => run_norms(&config),
    };
    let result = document.and_then(|mut doc| {
        if config.timing {
            doc.duration_seconds = Some(started.elapsed().as_secs_f64());
        }
        emit(&config, &doc)
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(config: &Config, doc: &ReportDocument) -> Result<()> {
    let json = doc.to_json()?;
    match config.out_path() {
        Some(path) => std::fs::write(&path, json).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{json}");
            Ok(())
        }
    }
}

pub fn run_certify(config: &Config) -> Result<ReportDocument> {
    let spec = config.certification()?;
    let a = config.operator()?;
    let mut doc = ReportDocument::new("certify", config);
    doc.reports.push(certify(&a, &spec)?);
    let vk = tensor_analysis(&a, &spec.frame1, &spec.frame2)?;
    doc.norm_tables
        .push(report::kernel_norm_table("kernel", &vk, &spec.m1, &spec.m2)?);
    Ok(doc)
}

/// Reports both kernel directions for an operator between two different
/// representations, certified concurrently and assembled in a fixed order.
pub fn run_cross(config: &Config) -> Result<ReportDocument> {
    if config.representation1 == config.representation2 {
        return Err(Error::Config(
            "cross needs two different representations".into(),
        ));
    }
    let base = config.certification()?;
    let a = config.operator()?;
    let reports = [CertDirection::OneToP, CertDirection::PToInf]
        .par_iter()
        .map(|d| {
            let mut spec = base.clone();
            spec.direction = *d;
            certify(&a, &spec)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut doc = ReportDocument::new("cross", config);
    doc.reports = reports;
    let vk = tensor_analysis(&a, &base.frame1, &base.frame2)?;
    doc.norm_tables
        .push(report::kernel_norm_table("cross-kernel", &vk, &base.m1, &base.m2)?);
    Ok(doc)
}

pub fn run_norms(config: &Config) -> Result<ReportDocument> {
    let spec = config.certification()?;
    let a = config.operator()?;
    let mut doc = ReportDocument::new("norms", config);
    let vk = tensor_analysis(&a, &spec.frame1, &spec.frame2)?;
    doc.norm_tables
        .push(report::kernel_norm_table("kernel", &vk, &spec.m1, &spec.m2)?);
    if let Some(path) = &config.signal {
        let f = crate::io::read_signal(std::path::Path::new(path))?;
        f.expect_len(config.n)?;
        let coeffs = analyze(&f, &spec.frame1)?;
        let rows = [Exponent::ONE, Exponent::TWO, Exponent::Infinite]
            .into_iter()
            .map(|p| {
                Ok(NormRow {
                    name: "coorbit".into(),
                    p,
                    value: weighted_lp_norm(&coeffs, p, &spec.m1)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        doc.norm_tables.push(NormTable {
            title: "signal".into(),
            rows,
        });
    }
    Ok(doc)
}

pub fn run_selftest(config: &Config) -> i32 {
    let results = selftest::run_invariants(config);
    print!("{}", selftest::format_table(&results));
    match results.iter().find(|r| !r.passed()) {
        None => EXIT_OK,
        Some(r) => {
            eprintln!("selftest failed: {}", r.name);
            EXIT_SELFTEST
        }
    }
}
