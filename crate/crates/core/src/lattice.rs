//! Integral lattices with a symmetric pairing, as Picard/Néron-Severi groups
//! of surfaces, and their blow-ups.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionLattice {
    labels: Vec<String>,
    gram: Vec<Vec<i64>>,
}

/// Integer coordinates in the basis of some lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub coords: Vec<i64>,
}

impl DivisorClass {
    pub fn new(coords: Vec<i64>) -> Self {
        DivisorClass { coords }
    }
}

impl IntersectionLattice {
    pub fn from_gram(labels: Vec<String>, gram: Vec<Vec<i64>>) -> Result<Self> {
        let rank = labels.len();
        if gram.len() != rank {
            return Err(Error::LengthMismatch { expected: rank, found: gram.len() });
        }
        for row in &gram {
            if row.len() != rank {
                return Err(Error::LengthMismatch { expected: rank, found: row.len() });
            }
        }
        for i in 0..rank {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NonSymmetricGram);
                }
            }
        }
        Ok(IntersectionLattice { labels, gram })
    }

    /// The zero lattice, e.g. for a surface with no algebraic classes recorded.
    pub fn rank_zero() -> Self {
        IntersectionLattice { labels: Vec::new(), gram: Vec::new() }
    }

    /// `Pic(P²) = Z·H` with `H² = 1`.
    pub fn projective_plane() -> Self {
        IntersectionLattice { labels: vec!["H".into()], gram: vec![vec![1]] }
    }

    /// `g` orthogonal copies of the hyperbolic plane `[[0, 1], [1, 0]]`.
    pub fn hyperbolic(g: usize) -> Self {
        let rank = 2 * g;
        let mut gram = vec![vec![0; rank]; rank];
        let mut labels = Vec::with_capacity(rank);
        for k in 0..g {
            gram[2 * k][2 * k + 1] = 1;
            gram[2 * k + 1][2 * k] = 1;
            labels.push(format!("e{}", k + 1));
            labels.push(format!("f{}", k + 1));
        }
        IntersectionLattice { labels, gram }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn basis_class(&self, index: usize) -> DivisorClass {
        let mut coords = vec![0; self.rank()];
        coords[index] = 1;
        DivisorClass::new(coords)
    }

    pub fn class_by_label(&self, label: &str) -> Option<DivisorClass> {
        self.labels.iter().position(|l| l == label).map(|i| self.basis_class(i))
    }

    /// Blow up `k` distinct points: appends classes `E1..Ek` with
    /// `Ei·Ej = -δij`, orthogonal to the old basis.
    pub fn blow_up(&self, k: i64) -> Result<IntersectionLattice> {
        if k < 0 {
            return Err(Error::NegativeBlowUp(k));
        }
        let old = self.rank();
        let next_index = self.labels.iter().filter(|l| l.starts_with('E')).count();
        let rank = old + k as usize;
        let mut gram = vec![vec![0; rank]; rank];
        for (i, row) in self.gram.iter().enumerate() {
            gram[i][..old].copy_from_slice(row);
        }
        let mut labels = self.labels.clone();
        for j in 0..k as usize {
            gram[old + j][old + j] = -1;
            labels.push(format!("E{}", next_index + j + 1));
        }
        Ok(IntersectionLattice { labels, gram })
    }

    pub fn pair(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
        for d in [d1, d2] {
            if d.coords.len() != self.rank() {
                return Err(Error::LengthMismatch { expected: self.rank(), found: d.coords.len() });
            }
        }
        let mut total = 0;
        for (i, &a) in d1.coords.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in d2.coords.iter().enumerate() {
                total += a * self.gram[i][j] * b;
            }
        }
        Ok(total)
    }

    pub fn square(&self, d: &DivisorClass) -> Result<i64> {
        self.pair(d, d)
    }
}

/// Self-intersection of `E = E1 + ... + En` on `base` blown up at `n`
/// points: the exceptional divisor on a generic fiber of the incidence
/// variety over a reduced length-`n` subscheme.
pub fn exceptional_total_square(n: i64, base: &IntersectionLattice) -> Result<i64> {
    if n < 1 {
        return Err(Error::InvalidLength(n));
    }
    let blown = base.blow_up(n)?;
    let mut coords = vec![0; blown.rank()];
    for c in &mut coords[base.rank()..] {
        *c = 1;
    }
    blown.square(&DivisorClass::new(coords))
}
