use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "rrseq", version, about = "Real-root counts of power-series sections (the RR transform)")]
pub struct Cli {
    /// Worker threads for root counting.
    #[arg(long, global = true, env = "RR_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Write results here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Report search progress on standard error.
    #[arg(long, global = true)]
    pub progress: bool,

    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `n value` per line.
    Bfile,
    Csv,
    Table,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SeqArgs {
    /// Sequence family (run `rrseq catalog` for the list).
    #[arg(long)]
    pub seq: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct PolyArgs {
    /// Ascending integer coefficients, e.g. "13827 2456 99 1".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "poly_file")]
    pub poly: Option<String>,
    /// File holding the coefficients in the same format.
    #[arg(long)]
    pub poly_file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// b_n for n = 0..=n_max of a catalog family or literal terms.
    Rr {
        #[command(flatten)]
        seq: SeqArgs,
        /// Literal terms a_0 a_1 ... instead of a family.
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Real roots of a polynomial, with multiplicity.
    Count {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Isolating regions of a square-free polynomial.
    Isolate {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Smallest k with (i+1)^k giving b_i = i for all i <= n.
    Cn {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2000)]
        k_cap: u64,
        #[arg(long)]
        k_start: Option<u64>,
        /// Print every c_m for m <= n.
        #[arg(long)]
        all: bool,
    },
    /// Smallest k with prod_{i<=n} (i^k x + 1) completely real.
    Table2 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2000)]
        k_cap: u64,
        /// Print every value for 1 <= m <= n.
        #[arg(long)]
        all: bool,
    },
    /// Whether every section p_i has i real roots.
    CheckCr {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Completely-real verdicts for the Eulerian polynomials A_n.
    EulerianScan {
        #[arg(long, default_value_t = 1)]
        n_lo: usize,
        #[arg(long)]
        n_hi: usize,
    },
    /// Which case of the quadratic minimality theorem a n^2 + b n + c meets.
    ClassifyQuadratic {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Largest odd n checked in case III(iii).
        #[arg(long, default_value_t = 51)]
        odd_bound: usize,
    },
    /// Fit a_{n+1}/a_n = (a n + b)/(c n + d).
    DetectRatio {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
    },
    /// Add u x^(n+1) keeping all roots real and distinct.
    ExtendDistinct {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, default_value_t = 1)]
        iters: usize,
    },
    /// Add u x^(n+1) keeping the real-root count minimal.
    ExtendMinimal {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, default_value_t = 1)]
        iters: usize,
    },
    /// Real roots of (x-1)^n + u x^(n+1) over a grid of n and u.
    PropScan {
        #[arg(long, default_value_t = 3)]
        n_lo: usize,
        #[arg(long)]
        n_hi: usize,
        /// Comma-separated rationals.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
        u: Vec<String>,
    },
    /// Sufficient conditions (i)-(iii) for minimality of a positive sequence.
    Hyperexp {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        n_check: usize,
    },
    /// List the sequence families, or print terms of one.
    Catalog {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
    },
}
