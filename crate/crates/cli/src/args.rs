use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "isotypic", version, about = "Exact symmetric-group representation combinatorics")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest enumeration (in terms) a command may start.
    #[arg(long, global = true, default_value_t = isotypic::bounds::DEFAULT_TERM_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,

    /// Worker threads for parallel sweeps; 0 lets the runtime decide.
    /// Ignored by builds without the `parallel` feature.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the partitions of k in canonical (reverse-lexicographic) order.
    Partitions {
        k: usize,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Dimension of the Specht module of a partition.
    Dim { lambda: String },
    /// Kostka number K(mu, lambda).
    Kostka { mu: String, lambda: String },
    /// Littlewood-Richardson coefficient c^nu_{lambda, mu}.
    Lr { nu: String, lambda: String, mu: String },
    /// Decomposition of the permutation module M^lambda.
    Young { lambda: String },
    /// Multiplicity of S^mu in the module induced from trivial blocks `trivial` and sign blocks `sign`.
    SplitMult { mu: String, trivial: String, sign: String },
    /// Decomposition of the module induced from trivial blocks `trivial` and sign blocks `sign`.
    SplitModule { trivial: String, sign: String },
    /// The admissible set I(k, d, m).
    Iset {
        k: usize,
        d: usize,
        m: usize,
        /// List every member.
        #[arg(long, conflicts_with = "member")]
        enumerate: bool,
        /// Test a single partition for membership.
        #[arg(long)]
        member: Option<String>,
    },
    /// Evaluate a multiplicity bound exactly.
    Bound {
        #[arg(value_enum)]
        kind: BoundArg,
        #[command(flatten)]
        params: BoundFlags,
    },
    /// H^0 of the example variety with k + 1 orbits.
    Example {
        k: usize,
        /// Print the sign-twisted top cohomology instead of H^0.
        #[arg(long)]
        top: bool,
        /// Also check k! * sum (mu1 - mu2 + 1)^2 / ((mu1 + 1)! mu2!) = 2^k.
        #[arg(long)]
        verify_identity: bool,
    },
    /// Check the Mayer-Vietoris inequality for two orbit-spec files.
    MvCheck { first: PathBuf, second: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundArg {
    Affine,
    Sa,
    Complex,
    Projective,
    Equivariant,
    Projection,
}

#[derive(Args, Debug)]
pub struct BoundFlags {
    /// Block sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub k: Vec<usize>,
    /// Block widths, comma separated; defaults to 1 per block.
    #[arg(long, value_delimiter = ',')]
    pub m: Vec<usize>,
    /// Degree bound.
    #[arg(long)]
    pub d: usize,
    /// Number of defining polynomials (semi-algebraic bound).
    #[arg(long)]
    pub s: Option<usize>,
    /// Target irreducible, e.g. `[2,1]` or `[2,1];[1]`; defaults to the trivial one.
    #[arg(long)]
    pub mu: Option<String>,
    /// Letters acted on (projective bound); defaults to k + 1.
    #[arg(long)]
    pub letters: Option<usize>,
}
