//! Command-line arguments.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ybalg", version, about = "Exact Yang-Baxter operator and algebra identity checks")]
pub struct Cli {
    /// Emit the report as JSON
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the identity checks on an algebra file or bundled algebra
    AlgebraCheck {
        file: String,
    },
    /// Braid, quantum Yang-Baxter or transfer checks on an operator
    Ybe(YbeArgs),
    /// Exhaustive scan of the associative-algebra family over GF(p)
    Scan(ScanArgs),
    /// Emit a member of the two-qubit gate family
    Gate(GateArgs),
    /// Symbolic products on the tensor algebra
    Tprod(TprodArgs),
    /// Print the file text of a bundled algebra
    Export {
        name: String,
    },
    /// Print a seeded random invertible matrix over GF(p) as a matrix file
    RandomMatrix {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    /// List bundled algebras and matrices
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Equation {
    Braid,
    Qybe,
    Transfer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Assoc,
    Superlie,
}

#[derive(Debug, Args)]
pub struct YbeArgs {
    pub equation: Equation,
    #[arg(long, conflicts_with = "matrix")]
    pub family: Option<Family>,
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    /// Central even element: a basis label or comma-separated coordinates
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Operator on V⊗V in column convention
    #[arg(long)]
    pub matrix: Option<String>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub algebra: String,
    /// gf:p; defaults to the algebra's field
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long)]
    pub parallel: bool,
    /// Largest operator side length (d²) to scan
    #[arg(long, default_value_t = 256)]
    pub max_operator: usize,
    /// Largest number of (α, β, γ) triples
    #[arg(long, default_value_t = 10_000)]
    pub max_triples: u64,
}

#[derive(Debug, Args)]
pub struct GateArgs {
    #[arg(long)]
    pub eta: u8,
    #[arg(long, allow_hyphen_values = true)]
    pub q: String,
    /// Rebuild the matrix from the associative-algebra operator
    #[arg(long)]
    pub realize: bool,
    /// Check (I⊗H)·CZ·(I⊗H) = 2·CNOT
    #[arg(long)]
    pub bridge: bool,
    /// Also print the column-convention matrix
    #[arg(long)]
    pub columns: bool,
}

#[derive(Debug, Args)]
pub struct TprodArgs {
    /// 11, 21 or 12
    #[arg(long = "case")]
    pub case: String,
    #[arg(long)]
    pub algebra: Option<String>,
    /// Comma-separated generator=value pairs; a value is a basis label, 1 or 0
    #[arg(long)]
    pub assign: Option<String>,
}
