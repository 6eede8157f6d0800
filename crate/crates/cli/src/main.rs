//! `hgr`: exact computations in quaternionic Grassmannian and flag rings,
//! with JSON in and out.

mod commands;
mod verify;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "hgr", version, about = "Cohomology rings of quaternionic Grassmannians and flags")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generators, relations and Schur basis of HGr(r,n).
    Ring {
        #[command(flatten)]
        rn: RankArgs,
        /// Polynomial in e or p to normal-form.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Product of a JSON array of Schur vectors in HGr(r,n).
    Mul {
        #[command(flatten)]
        rn: RankArgs,
        #[arg(long)]
        json: PathBuf,
    },
    /// The flag ring HFlag(1^r; n).
    Flag {
        #[command(flatten)]
        rn: RankArgs,
        #[arg(long)]
        check_ideals: bool,
        #[arg(long)]
        basis: bool,
        /// Polynomial in y to decompose over the Grassmannian ring.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Pontryagin-class calculus.
    Pont {
        #[command(subcommand)]
        op: PontOp,
    },
    /// Localization maps and their exactness.
    Localize {
        #[command(flatten)]
        rn: RankArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Stabilization table as n grows.
    Stability {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        cap: u32,
    },
    /// Dimension bookkeeping.
    Geom {
        #[command(subcommand)]
        op: GeomOp,
    },
    /// Runs the invariant suite over a range of (r, n).
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Largest r to include.
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Clone, Copy)]
struct RankArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum PontOp {
    /// Cartan sum of a JSON array of classes.
    Sum {
        #[arg(long)]
        json: PathBuf,
    },
    /// Class with given Pontryagin roots.
    Roots {
        #[arg(long)]
        json: PathBuf,
    },
    /// Monic division of Pontryagin polynomials.
    Divide {
        #[arg(long)]
        json: PathBuf,
    },
    /// Nilpotency index in HGr(r,n), of the payload or of each p_i.
    Nilpotency {
        #[command(flatten)]
        rn: RankArgs,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GeomOp {
    /// Stratification of HP^n.
    Strata {
        #[arg(long)]
        n: usize,
    },
    /// Dimensions of HGr(r,n) and HFlag(1^r; n).
    Dim {
        #[command(flatten)]
        rn: RankArgs,
    },
}

/// Why a command did not succeed.
pub enum Failure {
    /// Bad arguments or payload; exit 2.
    Usage(String),
    /// A computed invariant failed; the report is still printed. Exit 1.
    Invariant(Value),
}

impl From<hgr_core::Error> for Failure {
    fn from(e: hgr_core::Error) -> Self {
        use hgr_core::Error as E;
        match e {
            E::EliminationFailed(_) | E::NilpotencyBound(_) | E::InexactDivision => {
                Failure::Invariant(serde_json::json!({ "error": e.to_string() }))
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

pub type Outcome = Result<Value, Failure>;

/// Reads and parses a payload from a file or, for `-`, standard input.
pub fn read_payload<T: DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("malformed JSON payload: {e}")))
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Ring { rn, json } => commands::ring(rn.r, rn.n, json.as_ref()),
        Command::Mul { rn, json } => commands::mul(rn.r, rn.n, &json),
        Command::Flag {
            rn,
            check_ideals,
            basis,
            json,
        } => commands::flag(rn.r, rn.n, check_ideals, basis, json.as_ref()),
        Command::Pont { op } => match op {
            PontOp::Sum { json } => commands::pont_sum(&json),
            PontOp::Roots { json } => commands::pont_roots(&json),
            PontOp::Divide { json } => commands::pont_divide(&json),
            PontOp::Nilpotency { rn, json } => commands::pont_nilpotency(rn.r, rn.n, json.as_ref()),
        },
        Command::Localize { rn, seed } => commands::localize(rn.r, rn.n, seed),
        Command::Stability { r, max_n, cap } => commands::stability(r, max_n, cap),
        Command::Geom { op } => match op {
            GeomOp::Strata { n } => commands::geom_strata(n),
            GeomOp::Dim { rn } => commands::geom_dim(rn.r, rn.n),
        },
        Command::Verify { max_n, r, seed } => verify::run(r, max_n, seed),
    }
}

fn emit(doc: &Value) {
    let text = serde_json::to_string_pretty(doc).expect("JSON values serialize");
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(doc) => {
            emit(&doc);
            ExitCode::SUCCESS
        }
        Err(Failure::Invariant(doc)) => {
            emit(&doc);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("hgr: {msg}");
            ExitCode::from(2)
        }
    }
}
