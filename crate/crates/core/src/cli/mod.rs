//! Command-line driver: argument parsing, configuration and JSON reports.

mod commands;
mod config;
mod report;

pub use config::{Config, Mode, THREADS_ENV};
pub use report::{Assertion, Report};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::Error;

#[derive(Parser, Debug)]
#[command(name = "sympkit", version, about = "Exact GSp4 computations")]
pub struct Cli {
    /// Print the JSON report instead of the text summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// TOML configuration file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate GSp4(F_l) and its characteristic-polynomial histogram.
    Census {
        #[arg(long)]
        ell: u64,
        /// Write the histogram CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Build one of the explicit subgroup families.
    Family {
        #[arg(long)]
        case: String,
        #[arg(long)]
        ell: u64,
    },
    /// Least M with C(eta, M) for a family.
    Ceta {
        #[arg(long)]
        case: String,
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        eta: String,
    },
    /// Hecke data and local factors from Satake parameters.
    Hecke {
        /// Comma-separated `a0,a1,a2`, each a Gaussian rational.
        #[arg(long)]
        satake: String,
        #[arg(long)]
        p: u64,
    },
    /// Elements of bounded conjugate norm in Z, Z[i] or Z[w].
    Ylattice {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        c: String,
    },
    /// Explicit constructions.
    Gallery {
        #[command(subcommand)]
        which: GalleryCommand,
    },
    /// Coset representatives indexed by P^1(Z/p^beta).
    P1reps {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        beta: u32,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum GalleryCommand {
    /// The solvable example generated by A1..A5 and T.
    Martin,
    /// The cubic lift and its conjugator identities.
    Sym3,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let echo: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, echo) {
        Ok(report) => {
            let _ = if cli.json {
                writeln!(out, "{}", report.to_json())
            } else {
                write!(out, "{}", commands::text_summary(&report))
            };
            if report.all_pass() { EXIT_OK } else { EXIT_ASSERTION }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, echo: Vec<String>) -> crate::Result<Report> {
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.effective_threads()?)
        .build()
        .map_err(|e| Error::ResourceLimit(e.to_string()))?;
    let mut report = Report::new(echo);
    pool.install(|| commands::dispatch(&cli.command, &config, &mut report))?;
    if let Some(dir) = &config.output_dir {
        let name = format!("{}.json", commands::name(&cli.command));
        std::fs::create_dir_all(dir)
            .and_then(|_| std::fs::write(dir.join(name), report.to_json()))
            .map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
    }
    Ok(report)
}
