use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

/// Verify, enumerate, count and classify digit-reversing multiples.
///
/// Exit status: 0 on success, 1 when a well-formed query has a negative
/// answer, 2 on usage or input errors.
#[derive(Parser, Debug)]
#[command(name = "revmult", version, about)]
struct Cli {
    /// Emit one JSON record per line instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check whether NUMBER reverses when multiplied by k. Without --k, list
    /// every k that works.
    Verify {
        number: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=36))]
        base: u32,
    },
    /// List every reverse multiple with the given number of digits.
    Enumerate {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=36))]
        base: u32,
        #[arg(long, value_enum, default_value_t = Method::Graph)]
        method: Method,
        /// Largest number of candidates the oracle may scan.
        #[arg(long, default_value_t = revmult::DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Count reverse multiples for every length up to --max-length.
    Count {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        max_length: usize,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=36))]
        base: u32,
    },
    /// Re-derive the block parameters of the reference table.
    Table,
    /// Build the carry-pair automaton, report its size and feasibility, and
    /// optionally write it as a DOT file.
    Graph {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=36))]
        base: u32,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Graph,
    Structural,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = output::Output::new(cli.json);
    let outcome = match cli.command {
        Command::Verify { number, k, base } => commands::verify(&mut out, &number, k, base),
        Command::Enumerate {
            k,
            length,
            base,
            method,
            budget,
        } => commands::enumerate(&mut out, base, k, length, method, budget),
        Command::Count {
            k,
            max_length,
            base,
        } => commands::count(&mut out, base, k, max_length),
        Command::Table => commands::table(&mut out),
        Command::Graph { k, base, dot } => commands::graph(&mut out, base, k, dot.as_deref()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("revmult: {err}");
            ExitCode::from(commands::Status::Failure as u8)
        }
    }
}
