//! Fixed-point combinatorics of the incidence variety of nested subschemes
//! `ξ ⊂ η` with lengths `n` and `n + 1`, and the dimension bounds for the
//! strata `W_{i,n}` of `H_n × S` where the ideal of `ξ` needs exactly `i`
//! local generators.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::monomial::{generator_count, socle_count, strata_index};
use crate::partition::{enumerate_partitions, Partition};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedPair {
    pub lower: Partition,
    pub upper: Partition,
}

/// Every `(λ ⊢ n, μ)` with `μ` a cover of `λ`; `λ` in enumeration order,
/// then `μ` by the row of the added box.
pub fn nested_pairs(n: usize) -> Vec<NestedPair> {
    enumerate_partitions(n)
        .into_iter()
        .flat_map(|lower| {
            lower
                .covers()
                .into_iter()
                .map(move |upper| NestedPair { lower: lower.clone(), upper })
        })
        .collect()
}

/// Dimension of the fiber of `(ξ, P) ↦ ...`, i.e. of `P(I_ξ(P))`.
pub fn phi_fiber_dim(shape: &Partition, at_support: bool) -> Result<usize> {
    Ok(strata_index(shape, at_support)? - 1)
}

/// Dimension of `P(ω_η(P))` over the fixed point `μ`.
pub fn gamma_fiber_dim(shape: &Partition) -> Result<usize> {
    let from_socle = socle_count(shape)? - 1;
    let from_generators = generator_count(shape)? - 2;
    if from_socle != from_generators {
        return Err(Error::InvariantViolation(format!(
            "socle and generator counts of {shape} disagree"
        )));
    }
    Ok(from_socle)
}

/// Fixed-point count of the incidence variety, three ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerCounts {
    /// Nested monomial pairs.
    pub pairs: usize,
    /// Points of `P(I)` over `H_n × S`: sum of local generator counts.
    pub generator_sum: usize,
    /// Points of `P(ω)` over the universal family: sum of socle dimensions.
    pub socle_sum: usize,
}

pub fn euler_incidence(n: usize) -> Result<EulerCounts> {
    let pairs = nested_pairs(n).len();
    let mut generator_sum = 0;
    for shape in enumerate_partitions(n) {
        let at_support = !shape.is_empty();
        generator_sum += strata_index(&shape, at_support)?;
    }
    let mut socle_sum = 0;
    for shape in enumerate_partitions(n + 1) {
        socle_sum += socle_count(&shape)?;
    }
    let counts = EulerCounts { pairs, generator_sum, socle_sum };
    if pairs != generator_sum || pairs != socle_sum {
        return Err(Error::InvariantViolation(format!(
            "incidence counts differ at n = {n}: {counts:?}"
        )));
    }
    Ok(counts)
}

/// Largest local generator count of a colength-`n` monomial ideal, or 1
/// for `n = 0`. A diagram with `d` distinct part sizes has `d + 1`
/// generators and at least `d(d+1)/2` boxes.
pub fn max_generator_count(n: usize) -> usize {
    let mut d = 0;
    while (d + 1) * (d + 2) / 2 <= n {
        d += 1;
    }
    d + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StratumBound {
    Dim(i64),
    Empty,
}

impl StratumBound {
    pub fn dim(self) -> Option<i64> {
        match self {
            StratumBound::Dim(d) => Some(d),
            StratumBound::Empty => None,
        }
    }
}

impl fmt::Display for StratumBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StratumBound::Dim(d) => write!(f, "{d}"),
            StratumBound::Empty => f.write_str("empty"),
        }
    }
}

/// Upper bounds for `dim W_{i,n}`, indexed from `i = 1`. Indices past the
/// end are empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataBoundTable {
    n: usize,
    bounds: Vec<StratumBound>,
}

impl StrataBoundTable {
    /// Checks the shape invariants: `n >= 1`, `W_1` at full dimension
    /// `2n + 2`, no trailing empty entries.
    pub fn new(n: usize, bounds: Vec<StratumBound>) -> Result<Self> {
        let table = StrataBoundTable { n, bounds };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::MalformedTable("tables start at n = 1".into()));
        }
        if self.bounds.first() != Some(&StratumBound::Dim(self.full_dim())) {
            return Err(Error::MalformedTable(format!(
                "bound for i = 1 must be the full dimension {}",
                self.full_dim()
            )));
        }
        if self.bounds.last() == Some(&StratumBound::Empty) {
            return Err(Error::MalformedTable("trailing empty stratum".into()));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `dim H_n × S = 2n + 2`.
    pub fn full_dim(&self) -> i64 {
        2 * self.n as i64 + 2
    }

    /// Largest `i` with a nonempty bound.
    pub fn width(&self) -> usize {
        self.bounds.len()
    }

    pub fn bound(&self, i: usize) -> StratumBound {
        match i {
            0 => StratumBound::Empty,
            _ => self.bounds.get(i - 1).copied().unwrap_or(StratumBound::Empty),
        }
    }

    /// `(i, bound)` for `i = 1..=width`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, StratumBound)> + '_ {
        self.bounds.iter().enumerate().map(|(k, &b)| (k + 1, b))
    }

    /// Whether every bound respects `dim W_{i,n} <= 2n + 4 - 2i`.
    pub fn satisfies_dimension_bound(&self) -> bool {
        self.entries().all(|(i, b)| match b {
            StratumBound::Dim(d) => d <= 2 * self.n as i64 + 4 - 2 * i as i64,
            StratumBound::Empty => true,
        })
    }
}

/// Exact strata dimensions for single points: off the diagonal of `S × S`
/// the ideal is principal (dimension 4), on it the maximal ideal needs two
/// generators (dimension 2), and nothing needs more.
pub fn strata_base() -> StrataBoundTable {
    StrataBoundTable { n: 1, bounds: alloc::vec![StratumBound::Dim(4), StratumBound::Dim(2)] }
}

/// One step of the induction from `n` to `n + 1`.
///
/// Over `W_{j,n}` the blow-up has `P^{j-1}` fibers; a nested pair lands in
/// `W_{i,n+1}` only from `j ∈ {i-1, i, i+1}`, and the fibers of the map to
/// `W_{i,n+1}` have dimension `i - 2`. The open stratum `i = 1` is pinned to
/// the full dimension.
pub fn strata_propagate(table: &StrataBoundTable) -> Result<StrataBoundTable> {
    table.validate()?;
    let n = table.n + 1;
    let mut bounds = alloc::vec![StratumBound::Dim(2 * n as i64 + 2)];
    for i in 2..=table.width() + 1 {
        let source = [i - 1, i, i + 1]
            .into_iter()
            .filter_map(|j| table.bound(j).dim().map(|d| d + (j as i64 - 1)))
            .max();
        bounds.push(match source {
            Some(d) => StratumBound::Dim(d - (i as i64 - 2)),
            None => StratumBound::Empty,
        });
    }
    while bounds.last() == Some(&StratumBound::Empty) {
        bounds.pop();
    }
    StrataBoundTable::new(n, bounds)
}

/// The propagated table for `n >= 1`.
pub fn strata_table(n: usize) -> Result<StrataBoundTable> {
    if n == 0 {
        return Err(Error::MalformedTable("tables start at n = 1".into()));
    }
    let mut table = strata_base();
    for _ in 1..n {
        table = strata_propagate(&table)?;
    }
    Ok(table)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    Holds,
    Fails,
    /// The stratum is empty.
    Vacuous,
    /// The hypothesis does not constrain this `i`.
    NotApplicable,
}

impl Hypothesis {
    fn check(applies: bool, codim: Option<i64>, required: i64) -> Self {
        match (applies, codim) {
            (false, _) => Hypothesis::NotApplicable,
            (true, None) => Hypothesis::Vacuous,
            (true, Some(c)) if c >= required => Hypothesis::Holds,
            (true, Some(_)) => Hypothesis::Fails,
        }
    }

    pub fn is_ok(self) -> bool {
        self != Hypothesis::Fails
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::Holds => "holds",
            Hypothesis::Fails => "FAILS",
            Hypothesis::Vacuous => "vacuous",
            Hypothesis::NotApplicable => "n/a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodimRow {
    pub i: usize,
    pub bound: StratumBound,
    /// `(2n + 2) - bound`, absent for empty strata.
    pub codim: Option<i64>,
    /// `codim - (2i - 2)`.
    pub margin: Option<i64>,
    /// Whether a colength-`n` ideal can need `i` generators at all.
    pub realized: bool,
    /// `codim W_i >= i` for `i >= 2`.
    pub blowup_irreducible: Hypothesis,
    /// `codim W_i >= i + 1` for `i >= 3`.
    pub exceptional_irreducible: Hypothesis,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodimReport {
    pub n: usize,
    pub rows: Vec<CodimRow>,
}

impl CodimReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| {
            r.margin.is_none_or(|m| m >= 0)
                && r.blowup_irreducible.is_ok()
                && r.exceptional_irreducible.is_ok()
        })
    }
}

/// Codimension report for every `i` up to one past the table width, so at
/// least one vacuous row is always listed.
pub fn check_codim_hypotheses(table: &StrataBoundTable) -> CodimReport {
    let realized_width = max_generator_count(table.n);
    let rows = (1..=table.width() + 1)
        .map(|i| {
            let bound = table.bound(i);
            let codim = bound.dim().map(|d| table.full_dim() - d);
            let i64_i = i as i64;
            CodimRow {
                i,
                bound,
                codim,
                margin: codim.map(|c| c - (2 * i64_i - 2)),
                realized: i <= realized_width,
                blowup_irreducible: Hypothesis::check(i >= 2, codim, i64_i),
                exceptional_irreducible: Hypothesis::check(i >= 3, codim, i64_i + 1),
            }
        })
        .collect();
    CodimReport { n: table.n, rows }
}
