//! Monomial ideals of colength `n` in `k[x, y]` as staircases.
//!
//! Box `(r, c)` of a partition is the quotient monomial `x^c y^r`; the
//! ideal is spanned by every monomial outside the diagram. All local
//! invariants are taken at the origin, the only torus-fixed point of the
//! affine chart.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::partition::{Cell, Partition};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub xexp: u32,
    pub yexp: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { xexp: 0, yexp: 0 };

    pub const fn new(xexp: u32, yexp: u32) -> Self {
        Monomial { xexp, yexp }
    }

    pub const fn x(exp: u32) -> Self {
        Monomial { xexp: exp, yexp: 0 }
    }

    pub const fn y(exp: u32) -> Self {
        Monomial { xexp: 0, yexp: exp }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.xexp <= other.xexp && self.yexp <= other.yexp
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.xexp + rhs.xexp, self.yexp + rhs.yexp)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = |f: &mut fmt::Formatter<'_>, name: &str, e: u32| match e {
            0 => Ok(()),
            1 => f.write_str(name),
            _ => write!(f, "{name}^{e}"),
        };
        if *self == Monomial::ONE {
            return f.write_str("1");
        }
        var(f, "x", self.xexp)?;
        var(f, "y", self.yexp)
    }
}

/// A monomial with an integer coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub coefficient: i64,
    pub monomial: Monomial,
}

impl Term {
    pub const fn new(coefficient: i64, monomial: Monomial) -> Self {
        Term { coefficient, monomial }
    }
}

impl Mul for Term {
    type Output = Term;

    fn mul(self, rhs: Term) -> Term {
        Term::new(self.coefficient * rhs.coefficient, self.monomial * rhs.monomial)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coefficient, self.monomial == Monomial::ONE) {
            (1, _) => write!(f, "{}", self.monomial),
            (-1, false) => write!(f, "-{}", self.monomial),
            (c, true) => write!(f, "{c}"),
            (c, false) => write!(f, "{c}{}", self.monomial),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseIdeal {
    shape: Partition,
    generators: Vec<Monomial>,
}

impl StaircaseIdeal {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Minimal generators, x-exponent ascending.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Whether `m` lies in the ideal, i.e. outside the diagram.
    pub fn contains(&self, m: Monomial) -> bool {
        !self.shape.contains(Cell::new(m.yexp as usize, m.xexp as usize))
    }
}

/// The staircase ideal of `shape`.
///
/// Its outer corners are `x^{λ_0}` together with `x^{λ_{r+1}} y^{r+1}` for
/// every row `r` that ends a block of equal parts.
pub fn staircase(shape: &Partition) -> StaircaseIdeal {
    let mut generators: Vec<Monomial> = shape
        .removable_rows()
        .map(|r| Monomial::new(shape.part(r + 1) as u32, (r + 1) as u32))
        .collect();
    generators.push(Monomial::x(shape.largest_part() as u32));
    generators.sort_by_key(|m| m.xexp);
    StaircaseIdeal { shape: shape.clone(), generators }
}

/// Minimal number of generators of the ideal at the origin.
pub fn generator_count(shape: &Partition) -> Result<usize> {
    if shape.is_empty() {
        return Err(Error::UnitIdeal);
    }
    Ok(staircase(shape).generators.len())
}

/// Dimension of the socle of the quotient: boxes `m` with both `x m` and
/// `y m` in the ideal.
pub fn socle_count(shape: &Partition) -> Result<usize> {
    if shape.is_empty() {
        return Err(Error::UnitIdeal);
    }
    Ok(shape
        .cells()
        .filter(|c| {
            !shape.contains(Cell::new(c.row, c.col + 1)) && !shape.contains(Cell::new(c.row + 1, c.col))
        })
        .count())
}

/// Number of local generators of the ideal at the origin, or 1 when the
/// origin is off the support and the ideal is locally principal.
pub fn strata_index(shape: &Partition, at_support: bool) -> Result<usize> {
    if at_support {
        generator_count(shape)
    } else {
        Ok(1)
    }
}

/// The `g x (g-1)` syzygy matrix of a staircase ideal.
///
/// Rows follow the generators in descending x-exponent, `h_0 = x^{λ_0}` up
/// to `h_{g-1} = y^{ℓ(λ)}`. Column `j` is the syzygy
/// `y^{b} h_j - x^{a} h_{j+1} = 0` between neighbouring corners, so the
/// only nonzero entries are at `(j, j)` and `(j + 1, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBurchMatrix {
    generators: usize,
    diagonal: Vec<Term>,
    subdiagonal: Vec<Term>,
}

impl HilbertBurchMatrix {
    pub fn rows(&self) -> usize {
        self.generators
    }

    pub fn cols(&self) -> usize {
        self.generators - 1
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<Term> {
        if col >= self.cols() {
            return None;
        }
        if row == col {
            Some(self.diagonal[col])
        } else if row == col + 1 {
            Some(self.subdiagonal[col])
        } else {
            None
        }
    }

    /// The minor with row `i` deleted, for each `i`.
    ///
    /// Deleting row `i` leaves a block-triangular matrix, so the minor is
    /// the product of the diagonal entries above the gap and the
    /// subdiagonal entries below it.
    pub fn maximal_minors(&self) -> Vec<Term> {
        (0..self.generators)
            .map(|i| {
                let upper = self.diagonal[..i].iter();
                let lower = self.subdiagonal[i..].iter();
                upper.chain(lower).fold(Term::new(1, Monomial::ONE), |acc, &t| acc * t)
            })
            .collect()
    }
}

pub fn hilbert_burch(shape: &Partition) -> Result<HilbertBurchMatrix> {
    if shape.is_empty() {
        return Err(Error::UnitIdeal);
    }
    let mut corners = staircase(shape).generators;
    corners.reverse();
    let (diagonal, subdiagonal) = corners
        .windows(2)
        .map(|w| {
            let (left, right) = (w[0], w[1]);
            (
                Term::new(1, Monomial::y(right.yexp - left.yexp)),
                Term::new(-1, Monomial::x(left.xexp - right.xexp)),
            )
        })
        .unzip();
    Ok(HilbertBurchMatrix { generators: corners.len(), diagonal, subdiagonal })
}
