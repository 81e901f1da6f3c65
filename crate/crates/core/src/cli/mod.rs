//! The `swanson` command line.
//!
//! ```text
//! swanson check|spectrum|continuum|scatter|verify --config <path>
//!         [--out <path>] [--format csv|json] [--no-oracle]
//! ```
//!
//! Exit status is 0 on success, 1 on a runtime or numerical failure and 2
//! on a configuration or parameter-constraint error. With an output path
//! (from `--out` or `[output] path`) the result goes to that file and a
//! manifest to `<out>.manifest.json`; otherwise it is printed.

pub mod commands;
pub mod config;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

pub use config::{Format, GridSpec, ModelSpec, OracleSpec, RunConfig};
pub use output::{Cell, Table};

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "swanson", version, about = "Generalized Swanson models: spectra, continuum states, scattering and invariant checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct CommonArgs {
    /// INI run configuration.
    #[arg(long)]
    pub config: PathBuf,
    /// Output file; a manifest is written to `<out>.manifest.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Skip the finite-difference comparison.
    #[arg(long)]
    pub no_oracle: bool,
    /// Shift mu away from its true value (negative control for verify).
    #[arg(long, hide = true)]
    pub corrupt_mu: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameter constraints and derived model parameters.
    Check(CommonArgs),
    /// Bound-state energies, with a finite-difference comparison.
    Spectrum(CommonArgs),
    /// A continuum state and its densities sampled on the grid.
    Continuum(CommonArgs),
    /// Reflection and transmission amplitudes over a k sweep.
    Scatter(CommonArgs),
    /// The invariant battery: intertwining, residuals, eta-orthonormality, current constancy.
    Verify(CommonArgs),
}

impl Command {
    fn split(&self) -> (&'static str, &CommonArgs) {
        match self {
            Command::Check(a) => ("check", a),
            Command::Spectrum(a) => ("spectrum", a),
            Command::Continuum(a) => ("continuum", a),
            Command::Scatter(a) => ("scatter", a),
            Command::Verify(a) => ("verify", a),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ConstraintViolation { .. } | Error::Config(_) | Error::InvalidModel(_) | Error::InvalidWavenumber(_) => {
            EXIT_CONFIG
        }
        _ => EXIT_RUNTIME,
    }
}

/// Result text, its format, and the exit status it implies.
struct Produced {
    text: String,
    format: Option<Format>,
    status: i32,
}

fn produce(name: &str, args: &CommonArgs, cfg: &RunConfig) -> Result<Produced, Error> {
    let oracle = cfg.oracle.enabled && !args.no_oracle;
    let format = args.format.or(cfg.output_format);
    let table = |t: Table, default: Format| {
        let f = format.unwrap_or(default);
        Produced {
            text: t.render(f),
            format: Some(f),
            status: EXIT_OK,
        }
    };
    Ok(match name {
        "check" => {
            let r = commands::check(cfg);
            Produced {
                text: r.text,
                format: None,
                status: if r.passed { EXIT_OK } else { EXIT_CONFIG },
            }
        }
        "spectrum" => table(commands::spectrum(cfg, oracle)?, Format::Json),
        "continuum" => table(commands::continuum(cfg)?, Format::Csv),
        "scatter" => table(commands::scatter(cfg, oracle)?, Format::Json),
        _ => {
            let b = verify::run(cfg, args.corrupt_mu)?;
            Produced {
                text: b.render(),
                format: None,
                status: if b.passed() { EXIT_OK } else { EXIT_RUNTIME },
            }
        }
    })
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

/// Parses `args`, runs the command and returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let (name, args) = cli.command.split();
    let start = Instant::now();
    let cfg = match RunConfig::load(&args.config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let produced = match produce(name, args, &cfg) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let out = args.out.clone().or_else(|| cfg.output_path.as_ref().map(PathBuf::from));
    match out {
        Some(path) => {
            let elapsed = start.elapsed().as_secs_f64();
            if let Err(e) =
                output::write_with_manifest(&path, &produced.text, name, produced.format, &cfg, elapsed)
            {
                eprintln!("error: {e}");
                return EXIT_RUNTIME;
            }
            if produced.format.is_none() {
                emit(&produced.text);
            }
        }
        None => emit(&produced.text),
    }
    produced.status
}
