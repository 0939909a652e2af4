//! The `numrange` command: numerical ranges of 2x2 complex matrices from the
//! shell.
//!
//! Every subcommand reads one matrix (inline, from a file, or from stdin),
//! is fully deterministic for identical arguments, and reports numbers with
//! 17 significant digits so that output round-trips to the exact f64.
//!
//! Exit codes: 0 on success (and for "inside"), 1 for a semantically
//! negative result ("outside", failed verification), 2 for unusable input.

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use numrange::{numerical_range, semi_axes, verify_inclusion, Matrix2C};

mod emit;
mod input;

pub use emit::fmt_g17;
pub use input::{parse_matrix, parse_point};

const EXIT_OK: i32 = 0;
const EXIT_NEGATIVE: i32 = 1;
const EXIT_INPUT: i32 = 2;

#[derive(Parser)]
#[command(
    name = "numrange",
    version,
    about = "Numerical range of a 2x2 complex matrix: exact elliptical geometry, \
             membership tests, boundary points, and Monte-Carlo verification"
)]
struct Cli {
    #[command(flatten)]
    source: Source,

    /// Output format for range, boundary, and sample
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Matrix inline as eight comma-separated numbers:
    /// re11,im11,re12,im12,re21,im21,re22,im22
    #[arg(long, global = true, value_name = "FLAT8", allow_hyphen_values = true)]
    matrix: Option<String>,

    /// Read the matrix from this file (flat form or JSON rows of {"re","im"})
    #[arg(long, global = true, value_name = "PATH")]
    file: Option<PathBuf>,

    /// Read the matrix from standard input
    #[arg(long, global = true)]
    stdin: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the range as kind, center, foci, semi-axes, and orientation
    Range,

    /// Test whether a point lies in the range (exit 0 inside, 1 outside)
    Contains {
        /// Query point as re,im
        #[arg(long, value_name = "RE,IM", allow_hyphen_values = true)]
        point: String,

        /// Slack added to the membership test; defaults to 1e-9 (1 + ||A||_F)
        #[arg(long, value_name = "TOL", allow_hyphen_values = true)]
        tol: Option<f64>,
    },

    /// Print points of the boundary parametrization at evenly spaced parameters
    Boundary {
        /// Number of parameter values over [0, 2pi); must be at least 1
        #[arg(long, default_value_t = 256)]
        points: usize,
    },

    /// Draw range points from seeded uniformly random unit vectors
    Sample {
        /// Number of samples
        #[arg(long)]
        n: usize,

        /// RNG seed; identical seeds reproduce identical output
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },

    /// Monte-Carlo inclusion check plus the cross-check of the two
    /// computation routes (exit 1 if either fails)
    Verify {
        /// Number of samples; must be at least 1
        #[arg(long)]
        n: usize,

        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses `args` and executes the selected subcommand, returning the process
/// exit code. All output goes directly to stdout/stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // clap prints help/version to stdout (exit 0) and usage errors
            // to stderr (exit 2).
            let _ = err.print();
            return err.exit_code();
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_INPUT
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, String> {
    let a = load_matrix(&cli.source)?;
    match &cli.command {
        Command::Range => {
            let shape = numerical_range(&a);
            match cli.format {
                Format::Json => println!("{}", emit::range_json(&shape)),
                Format::Csv => print!("{}", emit::range_csv(&shape)),
            }
            Ok(EXIT_OK)
        }

        Command::Contains { point, tol } => {
            let z = parse_point(point)?;
            let tol = match tol {
                Some(t) if !t.is_finite() || *t < 0.0 => {
                    return Err(format!("--tol must be a finite number >= 0, got {t}"));
                }
                Some(t) => *t,
                None => 1e-9 * (1.0 + a.frobenius_norm()),
            };
            let shape = numerical_range(&a);
            if shape.contains(z, tol) {
                println!("inside");
                Ok(EXIT_OK)
            } else {
                println!("outside");
                Ok(EXIT_NEGATIVE)
            }
        }

        Command::Boundary { points } => {
            if *points == 0 {
                return Err("--points must be at least 1".into());
            }
            let shape = numerical_range(&a);
            match cli.format {
                Format::Json => println!("{}", emit::boundary_json(&shape, *points)),
                Format::Csv => print!("{}", emit::boundary_csv(&shape, *points)),
            }
            Ok(EXIT_OK)
        }

        Command::Sample { n, seed } => {
            let cloud = numrange::sample_range(&a, *n, *seed);
            match cli.format {
                Format::Json => println!("{}", emit::sample_json(&cloud, *seed)),
                Format::Csv => print!("{}", emit::sample_csv(&cloud, *seed)),
            }
            Ok(EXIT_OK)
        }

        Command::Verify { n, seed } => {
            if *n == 0 {
                return Err("--n must be at least 1".into());
            }
            let report = verify_inclusion(&a, *n, *seed).map_err(|e| e.to_string())?;

            // Cross-check the trace-invariant axes against the
            // canonical-form parameters.
            let (s_plus, s_minus) = semi_axes(&a);
            let cf = numrange::canonicalize(&a);
            let delta_major = (s_plus - cf.b().hypot(cf.c())).abs();
            let delta_minor = (s_minus - cf.b()).abs();

            let scale = 1.0 + a.frobenius_norm();
            let inclusion_tol = 1e-9 * scale;
            let consistency_tol = 1e-10 * scale;
            let pass = report.max_violation() <= inclusion_tol
                && delta_major <= consistency_tol
                && delta_minor <= consistency_tol;

            println!(
                "{}",
                emit::verify_json(
                    &report,
                    delta_major,
                    delta_minor,
                    inclusion_tol,
                    consistency_tol,
                    pass
                )
            );
            if pass {
                Ok(EXIT_OK)
            } else {
                if report.max_violation() > inclusion_tol {
                    eprintln!(
                        "verification failed: max_violation {:e} exceeds {:e}",
                        report.max_violation(),
                        inclusion_tol
                    );
                }
                if delta_major > consistency_tol || delta_minor > consistency_tol {
                    eprintln!(
                        "verification failed: computation routes disagree by {:e} (major) / {:e} (minor), tolerance {:e}",
                        delta_major, delta_minor, consistency_tol
                    );
                }
                Ok(EXIT_NEGATIVE)
            }
        }
    }
}

fn load_matrix(source: &Source) -> Result<Matrix2C, String> {
    let chosen = source.matrix.is_some() as u8 + source.file.is_some() as u8 + source.stdin as u8;
    if chosen == 0 {
        return Err("no matrix given: pass --matrix, --file, or --stdin".into());
    }
    if chosen > 1 {
        return Err("conflicting inputs: pass exactly one of --matrix, --file, --stdin".into());
    }

    let text = if let Some(flat) = &source.matrix {
        flat.clone()
    } else if let Some(path) = &source.file {
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
    } else {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        buf
    };
    parse_matrix(&text)
}
