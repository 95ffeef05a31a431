use clap::{Args, Parser, Subcommand, ValueEnum};
use hilb_core::equivariant::CharVector;

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(name = "hilb", version, about = "Exact fixed-point and intersection computations on Hilbert schemes of points")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the partitions of n with their local invariants.
    Partitions {
        #[arg(long)]
        n: usize,
    },
    /// Betti numbers from Bialynicki-Birula cells.
    Betti(BettiArgs),
    /// Fixed-point checks on the incidence variety of nested pairs.
    Incidence {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = IncidenceCheck::All)]
        check: IncidenceCheck,
    },
    /// Dimension bounds for the generator-count strata, propagated from n = 1.
    Strata {
        #[arg(long)]
        n: usize,
    },
    /// The Nakajima constants c_1, ..., c_n.
    Nakajima {
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value_t = NakajimaMethod::Both)]
        method: NakajimaMethod,
    },
    /// Blow-up lattices and the square of the total exceptional divisor.
    Lattice(LatticeArgs),
    /// Göttsche's generating series for a surface with even cohomology.
    Goettsche(GoettscheArgs),
    /// Run the invariant suite; exits 1 if anything fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Affine,
    P2,
    Punctual,
}

#[derive(Debug, Args)]
pub struct BettiArgs {
    #[arg(long, value_enum)]
    pub space: Space,
    #[arg(long)]
    pub n: usize,
    /// One-parameter subgroup as A,B; defaults to (1, K) with K > 2n².
    #[arg(long, value_parser = parse_char_vector, allow_hyphen_values = true)]
    pub rho: Option<CharVector>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IncidenceCheck {
    Jumps,
    Euler,
    Fibers,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NakajimaMethod {
    Recurrence,
    Closed,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaseLattice {
    /// Pic(P²) = ⟨H⟩, H² = 1.
    P2,
    /// One hyperbolic plane.
    Hyperbolic,
    /// The zero lattice.
    Zero,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    /// Number of points to blow up.
    #[arg(long, allow_hyphen_values = true)]
    pub blowup: i64,
    /// Report E² for E the sum of the exceptional classes instead of the Gram matrix.
    #[arg(long)]
    pub square_exceptional: bool,
    #[arg(long, value_enum, default_value_t = BaseLattice::P2)]
    pub base: BaseLattice,
}

#[derive(Debug, Args)]
pub struct GoettscheArgs {
    /// Betti numbers b0,b1,b2,b3,b4.
    #[arg(long, value_parser = parse_betti)]
    pub betti: [u32; 5],
    /// Truncation order in t.
    #[arg(long)]
    pub torder: u32,
    /// Compare each t-slice with the fixed-point Betti numbers of Hilb^n(P²).
    #[arg(long)]
    pub compare_fixed_points: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run every check.
    #[arg(long, required_unless_present = "only")]
    pub all: bool,
    /// Run only the named check (repeatable).
    #[arg(long)]
    pub only: Vec<String>,
    #[arg(long, default_value_t = 12)]
    pub nmax: usize,
}

fn parse_char_vector(s: &str) -> Result<CharVector, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected A,B, got {s:?}"))?;
    let a = a.trim().parse::<i64>().map_err(|e| format!("bad first entry: {e}"))?;
    let b = b.trim().parse::<i64>().map_err(|e| format!("bad second entry: {e}"))?;
    Ok(CharVector::new(a, b))
}

fn parse_betti(s: &str) -> Result<[u32; 5], String> {
    let values: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("bad Betti number {p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    values
        .try_into()
        .map_err(|v: Vec<u32>| format!("expected five Betti numbers, got {}", v.len()))
}
