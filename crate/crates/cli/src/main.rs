//! `ortho-extend`: integer orthoregular systems from the command line.
//!
//! Exit codes: 0 success, 1 verification or internal failure, 2 usage or
//! parse error, 3 mathematically infeasible input, 4 inconclusive search.

mod commands;
mod record;
mod selftest;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use ortho_core::text::{parse_integer, parse_vector};
use ortho_core::{IntVector, Orientation};

use commands::{CliError, ExploreOptions, Status};
use record::{Emitter, Format};

#[derive(Debug, Parser)]
#[command(name = "ortho-extend", version, about = "Integer orthoregular systems: extension, search and constructions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrientationArg {
    /// Determinant +l^3.
    So3,
    /// Last vector negated, determinant -l^3.
    O3,
}

impl From<OrientationArg> for Orientation {
    fn from(o: OrientationArg) -> Self {
        match o {
            OrientationArg::So3 => Orientation::Proper,
            OrientationArg::O3 => Orientation::Reflected,
        }
    }
}

fn vector_arg(s: &str) -> Result<IntVector, String> {
    parse_vector(s).map_err(|e| e.to_string())
}

fn integer_arg(s: &str) -> Result<BigInt, String> {
    parse_integer(s.trim()).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Extend an integer-norm vector of Z^3 to an orthoregular basis.
    Extend {
        #[arg(value_parser = vector_arg, allow_hyphen_values = true)]
        vector: IntVector,
        /// Emit one basis per representation found by exhaustive search.
        #[arg(long)]
        all_solutions: bool,
        #[arg(long, value_enum, default_value = "so3")]
        orientation: OrientationArg,
    },
    /// List primitive (a,b,c), 0 <= a <= b <= c, with integer norm.
    Enumerate {
        /// Largest coordinate.
        #[arg(long)]
        limit: Option<u64>,
        /// Number of vectors.
        #[arg(long)]
        count: Option<u64>,
        /// Extend each vector to a verified basis.
        #[arg(long)]
        extend: bool,
    },
    /// Represent l^2 by ax^2 + 2bxy + cy^2 with ac - b^2 = l^2.
    #[command(allow_negative_numbers = true)]
    SolveForm {
        #[arg(value_parser = integer_arg)]
        a: BigInt,
        #[arg(value_parser = integer_arg)]
        b: BigInt,
        #[arg(value_parser = integer_arg)]
        c: BigInt,
        #[arg(value_parser = integer_arg)]
        l: BigInt,
    },
    /// Full orthoregular basis of Z^n, n in {2, 4, 8}, from the multiplication tables.
    Hurwitz {
        n: usize,
        #[arg(value_parser = vector_arg, allow_hyphen_values = true)]
        vector: IntVector,
    },
    /// Prepend (l,0,...,0) to an orthoregular system of integer length l.
    Lift {
        /// Vectors of the system; write `(-4,3)` for a leading minus sign.
        #[arg(value_parser = vector_arg, required = true)]
        system: Vec<IntVector>,
    },
    /// Extend each block of a vector and concatenate the block bases.
    Compose {
        #[arg(value_parser = vector_arg, allow_hyphen_values = true)]
        vector: IntVector,
        /// Block size: 1, 3 (pipeline) or 2, 4, 8 (multiplication tables).
        #[arg(long)]
        block: usize,
    },
    /// Exhaustive search for the largest orthoregular extension of a system.
    Explore {
        /// Vectors of the system; write `(-4,3)` for a leading minus sign.
        #[arg(value_parser = vector_arg, required = true)]
        system: Vec<IntVector>,
        /// Coordinate bound for candidate vectors.
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        max_candidates: Option<u64>,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        timeout: Option<u64>,
    },
    /// n odd numbers (threes and ones) whose squares sum to a square, n = 1 mod 8.
    OddSquare { n: u64 },
    /// The n-1 vectors e_{2k-1} +- e_{2k} in odd dimension n.
    PairBasis { n: usize },
    /// Seeded randomized self-checks.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: u64,
    },
}

fn run(cli: Cli) -> Result<Status, CliError> {
    let mut out = Emitter::new(cli.format);
    match cli.command {
        Command::Extend {
            vector,
            all_solutions,
            orientation,
        } => commands::extend(&mut out, &vector, orientation.into(), all_solutions),
        Command::Enumerate { limit, count, extend } => commands::enumerate(&mut out, limit, count, extend),
        Command::SolveForm { a, b, c, l } => commands::solve_form(&mut out, a, b, c, l),
        Command::Hurwitz { n, vector } => commands::hurwitz(&mut out, n, &vector),
        Command::Lift { system } => commands::lift_cmd(&mut out, system),
        Command::Compose { vector, block } => commands::compose(&mut out, &vector, block),
        Command::Explore {
            system,
            bound,
            max_candidates,
            timeout,
        } => commands::explore(
            &mut out,
            system,
            &ExploreOptions {
                bound,
                max_candidates,
                timeout_secs: timeout,
            },
        ),
        Command::OddSquare { n } => commands::odd_square(&mut out, n),
        Command::PairBasis { n } => commands::pair_basis_cmd(&mut out, n),
        Command::Selftest { seed, cases } => selftest::run(&mut out, seed, cases),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("ORTHO_EXTEND_LOG"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Done) => ExitCode::SUCCESS,
        Ok(Status::Inconclusive) => {
            eprintln!("ortho-extend: search was not exhaustive within the given bound and budget; result is a lower bound");
            ExitCode::from(4)
        }
        Err(e) => {
            eprintln!("ortho-extend: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
