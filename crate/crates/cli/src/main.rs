// SPDX-License-Identifier: Apache-2.0

//! `ela`: checks, decompositions, cohomology and the Lie-2 functor on JSON
//! structure constants. Exit status 0 on success, 1 when a check fails,
//! 2 on unreadable input or bad usage.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ela", version, about = "Enhanced Leibniz algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of an ELA, Lie-2 algebra, Leibniz algebra or module.
    Check {
        /// File path, `-` for standard input, or `corpus:NAME`.
        input: String,
        /// Also check the derived identities on the image of t.
        #[arg(long)]
        extended: bool,
    },
    /// Split a symmetric ELA into its couple, module data and cocycle.
    Decompose { input: String },
    /// Rebuild an ELA from a decomposition.
    Reconstruct { input: String },
    /// The induced Lie-2 algebra of an ELA.
    Functor { input: String },
    /// Degree-2 cohomology.
    Cohomology {
        input: String,
        #[arg(long, value_enum, default_value_t = Complex::D)]
        complex: Complex,
        /// Dimension of the coefficient space U (d complex only).
        #[arg(long)]
        u_dim: Option<usize>,
        /// `squares`, `center`, `image`, or a JSON list of spanning vectors.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Print a built-in example.
    Corpus {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// Class of the binary form Δ_g under the rescaling action.
    ClassifyDelta { input: String },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Complex {
    D,
    Loday,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { input, extended } => commands::check(&input, extended),
        Command::Decompose { input } => commands::decompose(&input),
        Command::Reconstruct { input } => commands::reconstruct(&input),
        Command::Functor { input } => commands::functor(&input),
        Command::Cohomology {
            input,
            complex,
            u_dim,
            ideal,
        } => commands::cohomology(&input, complex, u_dim, ideal.as_deref()),
        Command::Corpus { name, list } => commands::corpus(name.as_deref(), list),
        Command::ClassifyDelta { input } => commands::classify_delta(&input),
    };
    match result {
        Ok(out) => {
            let text = ela_core::json::render(&out.json);
            match &cli.out {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, text) {
                        eprintln!("error: cannot write {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
