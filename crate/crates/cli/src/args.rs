//! Command-line grammar.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use pathdeg_core::Method;

#[derive(Debug, Parser)]
#[command(
    name = "pathdeg",
    version,
    about = "Graphs with no equal-degree vertices joined by a path of fixed length",
    long_about = "Graphs with no equal-degree vertices joined by a path of fixed length.\n\n\
                  Machine-readable results go to stdout, messages to stderr.\n\
                  Exit codes: 0 ok, 2 usage or invalid input, 3 refused by cost guard,\n\
                  10 violation found (check), 70 internal error."
)]
pub struct Cli {
    /// JSON-lines file caching search results.
    #[arg(long, global = true, env = "PATHDEG_CACHE", default_value = "pathdeg-cache.jsonl")]
    pub cache: PathBuf,

    /// Worker threads for the searches (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test a graph for two equal-degree vertices joined by a path of length ELL.
    Check {
        /// Graph in graph6 format.
        graph6: String,
        #[arg(long)]
        ell: usize,
    },
    /// Compute p_ell(n) exactly.
    Pfn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Canonical)]
        method: MethodArg,
        /// Maximum number of witnesses listed (the count is always exact).
        #[arg(long, default_value_t = pathdeg_core::search::DEFAULT_WITNESS_CAP)]
        witnesses: usize,
    },
    /// Build a lower-bound construction.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Validate a path-lemma instance and build its path.
    Lemma {
        #[arg(long, value_enum)]
        case: CaseArg,
        /// Graph in graph6 format.
        #[arg(long)]
        graph: String,
        /// High-degree vertices b_1,...,b_t.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        b: Vec<usize>,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// Evaluate one of the explicit bounds.
    Bounds {
        #[command(subcommand)]
        which: BoundsCmd,
    },
    /// Tabulate searched values against constructions and bounds.
    Table {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        nmin: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
        out: OutFormat,
        #[arg(long, value_enum, default_value_t = MethodArg::Canonical)]
        method: MethodArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConstructCmd {
    /// K_{A,B}.
    CompleteBipartite { a: usize, b: usize },
    /// Half graph on 2M vertices.
    HalfGraph { m: usize },
    /// The verified lower-bound graph for (L, N).
    Certificate { ell: usize, n: usize },
}

#[derive(Debug, Subcommand)]
pub enum BoundsCmd {
    /// Known exact values and lower bounds of p_L(N).
    Known { ell: usize, n: usize },
    /// Degree sum with distinct large degrees.
    EdgeSum { n: usize, k: usize, delta: usize },
    /// Degree sum when few degrees exceed n/2 + k.
    EvenCase1 { n: usize, k: usize },
    /// Degree sum in the first odd-length case.
    OddCase1 { n: usize, k: usize, delta: usize },
    /// Lower bound on |X| for a graph and threshold D.
    ClaimX { graph6: String, d: usize },
    /// Edge bound from the high-degree partition.
    Structural { graph6: String, d: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Labeled,
    Canonical,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Labeled => Method::Labeled,
            MethodArg::Canonical => Method::Canonical,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    A,
    B,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Csv,
    Json,
}
