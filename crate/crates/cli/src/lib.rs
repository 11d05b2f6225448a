//! Command-line front end for `positivity-core`.
//!
//! [`run`] parses arguments and returns a [`CommandResult`]; the binary only
//! prints it. Exit codes: 0 success, 1 a mathematical check failed, 2 usage
//! or input error. Every JSON payload on exit 1 or 2 has a `"reason"`.

mod commands;
mod text;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub payload: Value,
    /// Human-readable rendering, printed when `--json` is absent.
    pub text: String,
    pub json: bool,
}

impl CommandResult {
    /// What the binary writes to standard output.
    pub fn stdout(&self) -> String {
        if self.json {
            serde_json::to_string_pretty(&self.payload).expect("payload is valid JSON")
        } else {
            self.text.clone()
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "positivity", version, about = "Positivity certificates, Delsarte bounds and lattice invariants")]
struct Cli {
    /// Emit the JSON payload instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print G_k^{(n)} and optionally expand a polynomial in that basis.
    Gegenbauer {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        k: usize,
        /// JSON file `{"poly": ["c0", "c1", ...]}` to expand.
        #[arg(long)]
        expand: Option<PathBuf>,
    },
    /// Linear-programming bounds for spherical codes.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Positivity checks.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Embed a finite metric space in Euclidean space or on the sphere.
    Embed {
        #[arg(value_enum)]
        geometry: Geometry,
        /// Distance matrix `{"n": k, "rows": [[...], ...]}`.
        file: PathBuf,
    },
    /// Lattice invariants.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Schur-polynomial determinant identity.
    #[command(subcommand)]
    Schur(SchurCommand),
    /// Hermite constants, densities and kissing numbers of the known optimal lattices.
    Tables {
        /// Leave out the 24-dimensional row.
        #[arg(long)]
        skip_leech: bool,
    },
}

#[derive(Debug, Subcommand)]
enum BoundCommand {
    /// Solve the LP at degree d and certify the rounded optimum exactly.
    SphericalCode {
        #[arg(long)]
        dim: u32,
        /// Largest allowed inner product, as `p/q` or a decimal.
        #[arg(long, allow_hyphen_values = true)]
        cos: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 2000)]
        grid: usize,
    },
    /// Verify a kissing-number certificate: `paper-8`, `paper-24` or a JSON file.
    Kissing {
        #[arg(long)]
        cert: String,
    },
}

#[derive(Debug, Subcommand)]
enum CheckCommand {
    /// Eigenvalue test of a symmetric matrix `{"n", "rows"}`.
    Psd {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        tol: Option<f64>,
    },
    /// Search for a Jain matrix whose entrywise power is not psd.
    Preserver {
        #[arg(long, allow_hyphen_values = true)]
        power: f64,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// The 2x2 preserver conditions on samples `{"samples": [[x, fx], ...]}`.
    Midconvex { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum LatticeCommand {
    /// Minimum, kissing number, covolume, density and Hermite constant.
    Info {
        #[arg(long)]
        name: String,
    },
}

#[derive(Debug, Subcommand)]
enum SchurCommand {
    /// Compare both sides of the identity on seeded random instances.
    Verify {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        trials: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Geometry {
    Euclidean,
    Sphere,
}

/// Result of a command that ran: the payload and whether its check passed.
pub(crate) struct Outcome {
    pub passed: bool,
    pub payload: Value,
    pub text: String,
}

/// Input that could not be used.
pub(crate) struct InputError(pub String);

impl From<positivity_core::Error> for InputError {
    fn from(e: positivity_core::Error) -> Self {
        InputError(e.to_string())
    }
}

/// Parses and runs one command line; `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let wants_json = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let (exit_code, payload) = if informational {
                (EXIT_OK, json!({ "help": rendered }))
            } else {
                (EXIT_USAGE, json!({ "error": "usage", "reason": rendered }))
            };
            return CommandResult {
                exit_code,
                payload,
                text: rendered,
                json: wants_json,
            };
        }
    };
    let json = cli.json;
    match commands::dispatch(cli.command) {
        Ok(outcome) => CommandResult {
            exit_code: if outcome.passed { EXIT_OK } else { EXIT_CHECK_FAILED },
            payload: outcome.payload,
            text: outcome.text,
            json,
        },
        Err(InputError(reason)) => CommandResult {
            exit_code: EXIT_USAGE,
            payload: json!({ "error": "input", "reason": reason }),
            text: format!("error: {reason}\n"),
            json,
        },
    }
}
