use std::path::PathBuf;

use alpha_spectra::alpha::parse_alpha;
use alpha_spectra::Rational;
use clap::{Args, Parser, Subcommand};

fn alpha_arg(s: &str) -> Result<Rational, String> {
    parse_alpha(s).map_err(|e| e.to_string())
}

fn positive_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("{s:?} is not a positive number")),
    }
}

#[derive(Debug, Parser)]
#[command(name = "alpha-spectra", version, about = "Alpha-spectral radii, exact characteristic polynomials and extremal cyclic graphs")]
pub struct Cli {
    /// Run batches on one thread instead of the worker pool.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectral radius and Perron vector of one graph.
    Radius(RadiusArgs),
    /// Exact characteristic polynomial of A_alpha(G).
    Charpoly(CharpolyArgs),
    /// Build a named family member and describe it.
    Family(FamilyArgs),
    /// Brute-force maximizer search over U(n,d) or B(n,d).
    Enumerate(EnumerateArgs),
    /// Compare the spectral radii of two graphs with a certified bound.
    Compare(CompareArgs),
    /// Differences rho(B3*) - rho(B5*) over a grid of alphas.
    Table1(Table1Args),
    /// Check the tabulated factorizations of F_ij against direct determinants.
    VerifyAppendix(AppendixArgs),
    /// Randomized property suites for the graph transformation lemmas.
    VerifyLemmas(LemmaArgs),
    /// Record whether B3* is the bicyclic maximizer for alpha above 1/2.
    ConjectureProbe(ProbeArgs),
}

/// A graph given as graph6, a family string such as `bstar3:n=16,d=9`,
/// `-` for the first line of stdin, or `@path` for the first line of a file.
#[derive(Debug, Args)]
pub struct GraphArg {
    pub graph: String,
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    #[command(flatten)]
    pub input: GraphArg,
    #[arg(long, value_parser = alpha_arg)]
    pub alpha: Rational,
    #[arg(long, default_value_t = 1e-10, value_parser = positive_tol)]
    pub tol: f64,
    /// Also print the Perron vector.
    #[arg(long)]
    pub perron: bool,
    /// Write the result as JSON.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CharpolyArgs {
    #[command(flatten)]
    pub input: GraphArg,
    #[arg(long, value_parser = alpha_arg)]
    pub alpha: Rational,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// For example `theta3:s=3,a=5,b=4`, `ustar2:n=7,d=3` or `g1:z=2`.
    pub spec: String,
    /// Print the edge list as well.
    #[arg(long)]
    pub edges: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Diameter; every feasible diameter when omitted.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub cyclomatic: u8,
    #[arg(long, value_parser = alpha_arg)]
    pub alpha: Rational,
    #[arg(long, default_value_t = alpha_spectra::enumeration::DEFAULT_TIE_TOL, value_parser = positive_tol)]
    pub tie_tol: f64,
    #[arg(long, default_value_t = alpha_spectra::enumeration::DEFAULT_CAP)]
    pub cap: usize,
    /// Write the searched classes as graph6 lines.
    #[arg(long)]
    pub snapshot: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    pub g: String,
    pub h: String,
    #[arg(long, value_parser = alpha_arg)]
    pub alpha: Rational,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[arg(long, default_value_t = 16)]
    pub n: usize,
    #[arg(long, default_value_t = 9)]
    pub d: usize,
    #[arg(long, value_delimiter = ',', value_parser = alpha_arg,
          default_value = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8")]
    pub alphas: Vec<Rational>,
    /// Write the rows as CSV.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AppendixArgs {
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=12))]
    pub zmax: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub instances: usize,
    #[arg(long, value_delimiter = ',', value_parser = alpha_arg, default_value = "0,1/4,1/2,3/4")]
    pub alphas: Vec<Rational>,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(4..=16))]
    pub max_n: u32,
    /// Negative control: graft towards the smaller Perron entry.
    #[arg(long, hide = true)]
    pub mutate_graft: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long, value_delimiter = ',', value_parser = alpha_arg, default_value = "0.6,0.75,0.9")]
    pub alphas: Vec<Rational>,
    #[arg(long, default_value_t = 5)]
    pub n_min: usize,
    #[arg(long, default_value_t = 9)]
    pub n_max: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
