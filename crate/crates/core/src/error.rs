use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts must be positive and weakly decreasing.
    InvalidPartition,
    /// A box was addressed outside the diagram it was paired with.
    BoxNotInPartition { row: usize, col: usize },
    /// The empty partition has nothing to remove.
    NoCocovers,
    /// Local invariants at the origin need a nonempty subscheme.
    UnitIdeal,
    DegenerateChart,
    NonGenericSubgroup { weight: (i64, i64), rho: (i64, i64) },
    PunctualUndefined,
    NegativeBlowUp(i64),
    LengthMismatch { expected: usize, found: usize },
    NonSymmetricGram,
    InvalidLength(i64),
    /// A quantity that the theory forces to be an integer was not.
    NonIntegral { step: u64 },
    /// Two routes to the same number disagreed.
    InvariantViolation(String),
    OddCohomology,
    InvalidSurface(String),
    InvalidLevel(i64),
    InvalidBasisElement(usize),
    MalformedTable(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition => {
                f.write_str("parts must be positive and weakly decreasing")
            }
            Error::BoxNotInPartition { row, col } => {
                write!(f, "box not in partition: ({row}, {col})")
            }
            Error::NoCocovers => f.write_str("no cocovers: the empty partition has no removable box"),
            Error::UnitIdeal => f.write_str(
                "ideal is the unit ideal at a point off support (use strata_index for that case)",
            ),
            Error::DegenerateChart => f.write_str("degenerate chart: chart weights are linearly dependent"),
            Error::NonGenericSubgroup { weight, rho } => write!(
                f,
                "non-generic one-parameter subgroup: rho = ({}, {}) pairs to zero with weight ({}, {})",
                rho.0, rho.1, weight.0, weight.1
            ),
            Error::PunctualUndefined => f.write_str("punctual locus undefined for n = 0"),
            Error::NegativeBlowUp(k) => write!(f, "cannot blow up a negative number of points ({k})"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "divisor has {found} coordinates, lattice rank is {expected}")
            }
            Error::NonSymmetricGram => f.write_str("gram matrix is not symmetric"),
            Error::InvalidLength(n) => write!(f, "length must be at least 1, got {n}"),
            Error::NonIntegral { step } => write!(f, "non-integral value at recurrence step {step}"),
            Error::InvariantViolation(msg) => write!(f, "invariant violation: {msg}"),
            Error::OddCohomology => f.write_str("odd cohomology unsupported"),
            Error::InvalidSurface(msg) => write!(f, "invalid surface model: {msg}"),
            Error::InvalidLevel(m) => write!(f, "Heisenberg level out of range: {m}"),
            Error::InvalidBasisElement(i) => write!(f, "no cohomology basis element with index {i}"),
            Error::MalformedTable(msg) => write!(f, "malformed strata table: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
