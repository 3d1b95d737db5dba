use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "foxcol",
    version,
    about = "Fox-coloring invariants of link diagrams"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// One diagram, from a file or the bundled table.
#[derive(Debug, Args)]
pub struct DiagramSource {
    /// Diagram file (text format or PD code).
    #[arg(required_unless_present = "table", conflicts_with = "table")]
    pub file: Option<PathBuf>,
    /// Bundled diagram name or alias.
    #[arg(long)]
    pub table: Option<String>,
}

/// Any number of diagrams; everything in the table by default.
#[derive(Debug, Args)]
pub struct Selection {
    /// Diagram files.
    #[arg(conflicts_with_all = ["table", "all"])]
    pub files: Vec<PathBuf>,
    /// Bundled diagram name or alias; repeatable.
    #[arg(long, conflicts_with = "all")]
    pub table: Vec<String>,
    /// Every bundled diagram.
    #[arg(long)]
    pub all: bool,
}

fn modulus(s: &str) -> Result<u64, String> {
    let r: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if r < 2 {
        return Err(format!("modulus must be at least 2, got {r}"));
    }
    Ok(r)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Determinant, invariant factors and coloring matrix.
    Det(DiagramSource),
    /// Number of r-colorings.
    Count {
        #[command(flatten)]
        source: DiagramSource,
        #[arg(long, value_parser = modulus)]
        r: u64,
    },
    /// Least palette over non-trivial r-colorings, with the prediction.
    Mincol {
        #[command(flatten)]
        source: DiagramSource,
        #[arg(long, value_parser = modulus)]
        r: u64,
        /// Scan every r-coloring instead of reducing to primes.
        #[arg(long)]
        brute_force: bool,
    },
    /// Reduce a coloring to a prime modulus.
    Reduce {
        /// Coloring JSON file.
        coloring: PathBuf,
        #[command(flatten)]
        source: DiagramSource,
    },
    /// Lift a coloring to a multiple of its modulus.
    Lift {
        /// Coloring JSON file.
        coloring: PathBuf,
        #[command(flatten)]
        source: DiagramSource,
        #[arg(long, value_parser = modulus)]
        r: u64,
    },
    /// Check computed minima against the predictions.
    Verify {
        #[command(flatten)]
        selection: Selection,
        /// A single modulus.
        #[arg(long, value_parser = modulus, conflicts_with = "r_max")]
        r: Option<u64>,
        /// Check every modulus from 2 up to this one.
        #[arg(long, value_parser = modulus, default_value_t = 12)]
        r_max: u64,
    },
    /// Group minima by least common prime divisor and report bounds.
    Scan {
        #[command(flatten)]
        selection: Selection,
        #[arg(long, value_parser = modulus, default_value_t = 15)]
        r_max: u64,
    },
    /// List the bundled diagrams.
    Table,
}
