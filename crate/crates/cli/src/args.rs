use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leflab_core::groebner::DEFAULT_PRIME;

#[derive(Debug, Parser)]
#[command(name = "leflab", version, about = "Lefschetz properties of monomial and graded Artinian ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for randomized computations (0 = rayon default).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    /// Prime modulus of the coefficient field.
    #[arg(long, global = true, env = "LEFLAB_PRIME", default_value_t = DEFAULT_PRIME)]
    pub prime: u64,

    /// Master seed for randomized computations.
    #[arg(long, global = true, env = "LEFLAB_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Strong,
    Weak,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct IdealSource {
    /// Inline generators; monomials only selects the combinatorial pipeline.
    #[arg(long, group = "source")]
    pub ideal: Option<String>,

    /// File with one generator per line (`#` starts a comment).
    #[arg(long, group = "source")]
    pub file: Option<PathBuf>,

    /// Inline generators, always treated as polynomials.
    #[arg(long, group = "source")]
    pub poly: Option<String>,
}

#[derive(Debug, Args)]
pub struct IdealInput {
    /// Number of variables.
    #[arg(long = "vars")]
    pub nvars: usize,

    #[command(flatten)]
    pub source: IdealSource,

    /// Add (x1, ..., xn)^d to the ideal.
    #[arg(long)]
    pub artinian_cap: Option<u32>,
}

#[derive(Debug, Args)]
pub struct HilbertInput {
    /// Hilbert function, comma separated.
    #[arg(long = "h")]
    pub h: String,

    /// Number of variables.
    #[arg(long = "vars")]
    pub nvars: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function of an ideal, or properties of a given sequence.
    Hilbert(HilbertArgs),
    /// x_n-chain decomposition with its SL / WL verdicts.
    Chains(IdealInput),
    /// Stability classes of a monomial ideal.
    Classify(IdealInput),
    /// k-SLP / k-WLP certificate with the last k variables.
    Check(CheckArgs),
    /// Ideals realizing a Hilbert function.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Strongly stable ideals with a given Hilbert function.
    Enumerate(EnumerateArgs),
    /// Graded Betti numbers, formulas and bounds.
    #[command(subcommand)]
    Betti(BettiCommand),
    /// Monte-Carlo generic initial ideal in grevlex.
    Gin(GinArgs),
    /// Monte-Carlo k-SLP / k-WLP test with random linear forms.
    LefschetzGeneric(GenericArgs),
    /// Print a named example ideal in the input grammar.
    Fixture(FixtureArgs),
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    /// Number of variables.
    #[arg(long = "vars")]
    pub nvars: usize,

    /// Analyze this sequence instead of an ideal.
    #[arg(long = "h", conflicts_with_all = ["ideal", "file", "poly"])]
    pub h: Option<String>,

    /// Inline generators.
    #[arg(long)]
    pub ideal: Option<String>,

    /// Generator file.
    #[arg(long)]
    pub file: Option<PathBuf>,

    /// Inline polynomial generators.
    #[arg(long)]
    pub poly: Option<String>,

    /// Add (x1, ..., xn)^d to the ideal.
    #[arg(long)]
    pub artinian_cap: Option<u32>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: IdealInput,

    /// Number of last variables used as Lefschetz forms.
    #[arg(long, default_value_t = 1)]
    pub k: usize,

    #[arg(long, value_enum, default_value_t = Mode::Strong)]
    pub mode: Mode,
}

#[derive(Debug, Subcommand)]
pub enum ConstructCommand {
    /// The almost revlex ideal.
    AlmostRevlex(HilbertInput),
    /// The lex segment ideal.
    Lex(HilbertInput),
    /// Borel-fixed ideal built from the successive differences of h.
    Tower(TowerArgs),
    /// Lift an ideal in n-1 variables to n variables with Hilbert function h.
    Lift(LiftArgs),
}

#[derive(Debug, Args)]
pub struct TowerArgs {
    #[command(flatten)]
    pub hilbert: HilbertInput,

    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    #[command(flatten)]
    pub input: IdealInput,

    /// Target Hilbert function in one more variable.
    #[arg(long = "h")]
    pub h: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    None,
    Wl,
    Sl,
    Kslp,
    Kwlp,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub hilbert: HilbertInput,

    #[arg(long, value_enum, default_value_t = Filter::None)]
    pub filter: Filter,

    /// k for the kslp / kwlp filters.
    #[arg(long, default_value_t = 1)]
    pub k: usize,

    /// Stop with an error once more ideals than this are found.
    #[arg(long, default_value_t = 200_000)]
    pub max_results: usize,
}

#[derive(Debug, Subcommand)]
pub enum BettiCommand {
    /// Eliahou-Kervaire formula for stable ideals.
    Ek(IdealInput),
    /// Recursion for m-full ideals.
    Mfull(IdealInput),
    /// Koszul homology over the rationals.
    Koszul(IdealInput),
    /// Upper bound over Artinian quotients with the k-WLP.
    Bound(BoundArgs),
    /// Closed form for quotients with the k-WLP.
    ClosedForm(ClosedFormArgs),
}

#[derive(Debug, Args)]
pub struct ClosedFormArgs {
    #[command(flatten)]
    pub bound: BoundArgs,

    /// Monomial ideal in n-k variables with Hilbert function Δ^k h whose
    /// Betti numbers seed the formula (default: its lex ideal).
    #[arg(long)]
    pub base: Option<String>,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub hilbert: HilbertInput,

    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct GinArgs {
    #[command(flatten)]
    pub input: IdealInput,

    /// Number of random coordinate changes.
    #[arg(long, default_value_t = 5)]
    pub samples: usize,

    /// Repeat the computation over this second prime and warn on disagreement.
    #[arg(long)]
    pub check_prime: Option<u64>,
}

#[derive(Debug, Args)]
pub struct GenericArgs {
    #[command(flatten)]
    pub input: IdealInput,

    #[arg(long, default_value_t = 1)]
    pub k: usize,

    #[arg(long, value_enum, default_value_t = Mode::Strong)]
    pub mode: Mode,

    /// Number of independent choices of random forms.
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FixtureName {
    /// Three variables, chains satisfying the SL condition.
    SlpChains,
    /// Three variables, chains failing SL but satisfying WL.
    NonSlpChains,
    /// Strongly stable, h = (1,3,4,3,1), passes SL.
    BorelWlpI,
    /// Strongly stable, h = (1,3,4,3,1), passes WL only.
    BorelWlpJ,
    /// Strongly stable, h = (1,3,3,2).
    StableI,
    /// Stable but not strongly stable, h = (1,3,3,2).
    StableJ,
    /// Four variables, h = (1,4,8,7).
    FourVarI,
    /// Four variables, h = (1,4,8,7), same subring restriction as four-var-i.
    FourVarJ,
    /// Pure powers x_i^power.
    Powers,
    /// Power sums p_i for the listed indices.
    PowerSums,
    /// Elementary symmetric polynomials e_i(x^power) for the listed indices.
    Elementary,
}

#[derive(Debug, Args)]
pub struct FixtureArgs {
    #[arg(value_enum)]
    pub name: FixtureName,

    /// Number of variables for the symmetric families.
    #[arg(long = "vars", default_value_t = 3)]
    pub nvars: usize,

    /// Indices for the symmetric families, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub indices: Vec<usize>,

    /// Exponent substituted for each variable.
    #[arg(long, default_value_t = 1)]
    pub power: u32,
}
