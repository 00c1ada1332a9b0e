use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

/// Seed used by `--random` when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 0x0CA5_EED0;

#[derive(Parser, Debug)]
#[command(name = "oca", version, about = "Orthogonal cellular automata workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the output to a file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for the search drivers.
    #[arg(long, env = "OCA_THREADS", global = true)]
    pub threads: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the Latin square generated by a bipermutive rule.
    Latin(RuleArgs),
    /// Check whether two rules generate orthogonal Latin squares.
    Orthogonal(PairArgs),
    /// Cycle decomposition of the pair system.
    Cycles(PairArgs),
    /// Dump the orbit of a seed state.
    Keystream(KeystreamArgs),
    /// Exhaustive search over binary bipermutive pairs.
    Table1(Table1Args),
    /// Count linear pairs of maximal period.
    Table2(Table2Args),
    /// Analyze a file of rule pairs, one pair per line.
    Analyze(AnalyzeArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["rule", "table", "linear", "poly", "random"])))]
pub struct RuleArgs {
    /// Alphabet size (prime).
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Diameter; required with --rule and --random.
    #[arg(long)]
    pub d: Option<usize>,
    /// Wolfram code (binary rules).
    #[arg(long)]
    pub rule: Option<String>,
    /// Truth table, highest neighborhood first.
    #[arg(long)]
    pub table: Option<String>,
    /// Linear rule coefficients a1,...,ad.
    #[arg(long)]
    pub linear: Option<String>,
    /// Linear rule given by its polynomial.
    #[arg(long)]
    pub poly: Option<String>,
    /// Random bipermutive rule.
    #[arg(long)]
    pub random: bool,
    /// Seed for --random.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("pair").required(true).args(["rules", "linear", "poly"])))]
pub struct PairArgs {
    /// Alphabet size (prime).
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Diameter; required for Wolfram codes.
    #[arg(long)]
    pub d: Option<usize>,
    /// Two rules as Wolfram codes or tables, e.g. `90,150`.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub rules: Vec<String>,
    /// Linear rule coefficients; give the flag twice.
    #[arg(long)]
    pub linear: Vec<String>,
    /// Linear rules as polynomials; give the flag twice.
    #[arg(long)]
    pub poly: Vec<String>,
}

#[derive(Args, Debug)]
pub struct KeystreamArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Seed state as a digit string of length 2(d-1).
    #[arg(long)]
    pub state: String,
    /// Number of steps.
    #[arg(long, default_value_t = 16)]
    pub steps: usize,
    /// Also write the states bit-packed to this file (q = 2).
    #[arg(long)]
    pub binary: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Table1Args {
    #[arg(long)]
    pub d: usize,
    /// Allow the d = 6 run.
    #[arg(long)]
    pub long_run: bool,
    /// Resumable progress file.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Visit every ordered pair instead of balanced ones only.
    #[arg(long)]
    pub no_balance_filter: bool,
    /// Write the max-cycle-length distribution CSV here.
    #[arg(long)]
    pub distribution: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Ends {
    One,
    Nonzero,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Order {
    Lex,
    Either,
    Ordered,
}

#[derive(Args, Debug)]
pub struct Table2Args {
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long)]
    pub d: usize,
    /// List every maximal pair.
    #[arg(long)]
    pub list: bool,
    /// Admissible end coefficients of the candidate polynomials.
    #[arg(long, value_enum, default_value_t = Ends::One)]
    pub ends: Ends,
    /// Which polynomial pairs are counted.
    #[arg(long, value_enum, default_value_t = Order::Lex)]
    pub order: Order,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long)]
    pub d: usize,
    /// Write the max-cycle-length distribution CSV here.
    #[arg(long)]
    pub distribution: Option<PathBuf>,
}
