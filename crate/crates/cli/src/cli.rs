use std::path::PathBuf;

use albanese_core::Variant;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::suites::Suite;

#[derive(Debug, Parser)]
#[command(name = "albanese", version, about = "Stable Albanese homology of IA_n and related exact computations")]
pub struct Cli {
    /// Read and write the on-disk result cache.
    #[arg(long, global = true)]
    pub cache: bool,
    /// Cache directory (overrides ALBANESE_CACHE_DIR).
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Largest homological degree accepted by w and dims.
    #[arg(long, global = true, default_value_t = 5)]
    pub max_degree: usize,
    /// Worker threads for verification suites (default: available cores, at most 8).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Full,
    Outer,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Full => Variant::Full,
            VariantArg::Outer => Variant::Outer,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DimsTarget {
    /// Dimension polynomial of W_i.
    W,
    /// Dimension polynomial of the outer variant.
    WOuter,
    /// Conjectural dimension of H^i(IA_n).
    HConj,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose the stable Albanese homology in one degree.
    W(WArgs),
    /// Stable twisted cohomology of Aut(F_n) with coefficients in H^{p,q}.
    Aut(AutArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Dimension polynomials.
    Dims(DimsArgs),
    /// Exact GL(n,Z)-invariant dimensions of tensor spaces.
    Invariants(InvariantsArgs),
    /// Johnson homomorphism on IA generators or a given endomorphism.
    Johnson(JohnsonArgs),
    /// Check the Omega' isomorphism at one (n, p, q), optionally dumping Omega.
    Omega(OmegaArgs),
}

#[derive(Debug, Args)]
pub struct WArgs {
    #[arg(long)]
    pub degree: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::Full)]
    pub variant: VariantArg,
    /// Truncate to irreducibles that are nonzero at this rank.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Allow --rank below the stable range (output is then tagged unstable).
    #[arg(long, requires = "rank")]
    pub unstable: bool,
}

#[derive(Debug, Args)]
pub struct AutArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 6)]
    pub prop_max_p: usize,
    #[arg(long, default_value_t = 3)]
    pub prop_max_q: usize,
    #[arg(long, default_value_t = 4)]
    pub io_max_degree: usize,
    #[arg(long, default_value_t = 8)]
    pub plethysm_max_size: usize,
    #[arg(long, default_value_t = 5)]
    pub character_rank: usize,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[arg(long, value_enum)]
    pub target: DimsTarget,
    #[arg(long)]
    pub degree: usize,
    /// Also evaluate at this rank.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Allow --rank below the stable range (output is then tagged unstable).
    #[arg(long, requires = "rank")]
    pub unstable: bool,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    /// With --s, count invariants of T_{p,q} ⊗ T_{r,s} instead of H^{p,q}.
    #[arg(long, requires = "s")]
    pub r: Option<usize>,
    #[arg(long, requires = "r")]
    pub s: Option<usize>,
}

#[derive(Debug, Args)]
pub struct JohnsonArgs {
    #[arg(long)]
    pub n: usize,
    /// Report the rank of tau on the Magnus generators.
    #[arg(long, conflicts_with = "endo")]
    pub span: bool,
    /// Endomorphism as JSON, e.g. '{"x1": "x2 x1 x2^-1"}'.
    #[arg(long)]
    pub endo: Option<String>,
}

#[derive(Debug, Args)]
pub struct OmegaArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    /// Write the Omega matrix as "row col num/den" triplets.
    #[arg(long, value_name = "FILE")]
    pub dump: Option<PathBuf>,
}
