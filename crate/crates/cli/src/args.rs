use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ca-forge", version, about = "Exact verification drivers for the Casas-Alvero conjecture")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Coefficient field: `qq`, `gf` (with --p) or `gf(p)`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Prime: the field characteristic, or the scan prime / bound for search and badprimes.
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Emit a JSON document instead of text tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads; 0 uses every core, 1 runs sequentially.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    /// Work cap: S-pair reductions per Groebner basis and points per enumeration.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hasse-Schmidt derivatives and the total derivation.
    Hs(HsArgs),
    /// Higher discriminant tables.
    Disc(DiscArgs),
    /// D-ideals of principal monomial schemes.
    Dsub(DsubArgs),
    /// Generators of the per-tuple ideals.
    Geom(GeomArgs),
    /// Groebner basis, dimension and saturation.
    Gb(GbArgs),
    /// Check the CA hypothesis on one or more polynomials.
    CaCheck(CaCheckArgs),
    /// Exhaustive counterexample scan over GF(p).
    Search(SearchArgs),
    /// Counterexample counts for every prime up to --p.
    Badprimes(BadPrimesArgs),
    /// Regularity of the tuple sequences.
    Regseq(RegseqArgs),
    /// Saturated deformation dimension for every tuple.
    Mainprop(MainpropArgs),
    /// Fiber dimensions of the deformation at T = alpha.
    Fibers(FibersArgs),
    /// Largest verified truncation level together with q(n).
    Jc(JcArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum HsKind {
    /// Hasse-Schmidt derivative.
    Hs,
    /// `D^i` for the total derivation.
    Dpower,
    /// `D = Σ ∂/∂x_t`.
    Total,
}

#[derive(Args, Debug)]
pub struct HsArgs {
    /// Univariate polynomial in X.
    #[arg(long, conflicts_with = "poly")]
    pub uni: Option<String>,
    /// Polynomial in x1..xN.
    #[arg(long)]
    pub poly: Option<String>,
    /// Number of variables for --poly; inferred when omitted.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub i: u32,
    #[arg(long, value_enum, default_value_t = HsKind::Hs)]
    pub kind: HsKind,
}

#[derive(Args, Debug)]
pub struct DiscArgs {
    #[arg(long)]
    pub n: usize,
    /// Only this index.
    #[arg(long)]
    pub i: Option<usize>,
}

#[derive(Args, Debug)]
pub struct DsubArgs {
    /// Exponent vector, e.g. "2,1".
    #[arg(long)]
    pub shape: String,
    #[arg(long)]
    pub level: u32,
    /// Verify the component description with Groebner certificates.
    #[arg(long)]
    pub verify: bool,
    /// Use Hasse-Schmidt derivatives instead of powers of D.
    #[arg(long, conflicts_with = "verify")]
    pub hd: bool,
}

#[derive(Args, Debug)]
pub struct GeomArgs {
    #[arg(long)]
    pub n: usize,
    /// Involution indices, e.g. "3,3".
    #[arg(long)]
    pub tuple: String,
    /// Deformed generators in x1..x_{n-1}, T.
    #[arg(long)]
    pub deformed: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Args, Debug)]
pub struct GbArgs {
    /// Comma-separated polynomials in x1..xN, or a JSON array of strings.
    #[arg(long)]
    pub polys: String,
    /// Number of variables; inferred when omitted.
    #[arg(long)]
    pub n: Option<usize>,
    /// Saturate at this polynomial before computing the basis.
    #[arg(long)]
    pub saturate: Option<String>,
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
}

#[derive(Args, Debug)]
pub struct CaCheckArgs {
    /// Monic polynomial in X.
    #[arg(long, required_unless_present = "random")]
    pub f: Option<String>,
    /// Check this many seeded random monic polynomials of degree --n.
    #[arg(long, requires = "n", conflicts_with = "f")]
    pub random: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    /// Also run the consistency triangle.
    #[arg(long)]
    pub triangle: bool,
}

#[derive(Args, Debug)]
pub struct BadPrimesArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct RegseqArgs {
    #[arg(long)]
    pub n: usize,
    /// Sequence length; defaults to n - 1.
    #[arg(long)]
    pub level: Option<usize>,
}

#[derive(Args, Debug)]
pub struct MainpropArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct FibersArgs {
    #[arg(long)]
    pub n: usize,
    /// One tuple; every tuple of length n - 1 when omitted.
    #[arg(long)]
    pub tuple: Option<String>,
    /// Comma-separated values, e.g. "0,1,2/3".
    #[arg(long, default_value = "0,1/2,2/3,3/5,-1/3")]
    pub alphas: String,
}

#[derive(Args, Debug)]
pub struct JcArgs {
    #[arg(long)]
    pub n: usize,
    /// Largest length to try; defaults to n - 1.
    #[arg(long)]
    pub level: Option<usize>,
}
