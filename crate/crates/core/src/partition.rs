//! Integer partitions as Young diagrams.
//!
//! A partition is stored as its weakly decreasing list of positive parts,
//! read as row lengths: row `r` holds the boxes `(r, 0) .. (r, parts[r])`.
//! Indices are 0-based. The arm of a box counts the boxes strictly to its
//! right, the leg counts the boxes strictly below it.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

/// A box of a Young diagram, addressed by 0-based row and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    /// The empty partition of 0.
    pub const fn empty() -> Self {
        Partition { parts: Vec::new(), size: 0 }
    }

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    /// Builds from parts already known to be valid.
    fn from_valid(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of parts (rows).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Row length, 0 past the last row.
    pub fn part(&self, row: usize) -> usize {
        self.parts.get(row).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.col < self.part(cell.row)
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| Cell { row, col }))
    }

    pub fn distinct_part_count(&self) -> usize {
        let mut count = 0;
        let mut last = 0;
        for &p in &self.parts {
            if p != last {
                count += 1;
                last = p;
            }
        }
        count
    }

    /// Transpose of the diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.largest_part())
            .map(|col| self.parts.iter().take_while(|&&p| p > col).count())
            .collect();
        Partition::from_valid(parts)
    }

    pub fn arm(&self, cell: Cell) -> Result<usize> {
        self.check(cell)?;
        Ok(self.parts[cell.row] - cell.col - 1)
    }

    pub fn leg(&self, cell: Cell) -> Result<usize> {
        self.check(cell)?;
        let below = self.parts[cell.row..].iter().take_while(|&&p| p > cell.col).count();
        Ok(below - 1)
    }

    fn check(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::BoxNotInPartition { row: cell.row, col: cell.col })
        }
    }

    /// Rows where a box can be appended, including the new row at the bottom.
    pub fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.parts.len()).filter(move |&r| r == 0 || self.part(r - 1) > self.part(r))
    }

    /// Rows whose last box can be removed (the outer corners).
    pub fn removable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.parts.len()).filter(move |&r| self.part(r) > self.part(r + 1))
    }

    /// All partitions obtained by adding one box, in row order.
    pub fn covers(&self) -> Vec<Partition> {
        self.addable_rows()
            .map(|r| {
                let mut parts = self.parts.clone();
                if r == parts.len() {
                    parts.push(1);
                } else {
                    parts[r] += 1;
                }
                Partition::from_valid(parts)
            })
            .collect()
    }

    /// All partitions obtained by removing one box, in row order.
    pub fn cocovers(&self) -> Result<Vec<Partition>> {
        if self.is_empty() {
            return Err(Error::NoCocovers);
        }
        Ok(self
            .removable_rows()
            .map(|r| {
                let mut parts = self.parts.clone();
                parts[r] -= 1;
                if parts[r] == 0 {
                    parts.pop();
                }
                Partition::from_valid(parts)
            })
            .collect())
    }

    /// Box-wise containment of diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n`, in lexicographically descending order of their
/// parts: `(n)` first, `(1, 1, ..., 1)` last.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_valid(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(1), vec![p(&[1])]);
        assert_eq!(
            enumerate_partitions(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn rejects_bad_parts() {
        assert_eq!(Partition::new(vec![1, 2]), Err(Error::InvalidPartition));
        assert_eq!(Partition::new(vec![2, 0]), Err(Error::InvalidPartition));
        assert_eq!(p(&[3, 3, 1]).size(), 7);
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[4, 4, 2]).conjugate(), p(&[3, 3, 2, 2]));
    }

    #[test]
    fn arm_and_leg() {
        let one = p(&[1]);
        assert_eq!(one.arm(Cell::new(0, 0)), Ok(0));
        assert_eq!(one.leg(Cell::new(0, 0)), Ok(0));
        let two = p(&[2]);
        assert_eq!(two.arm(Cell::new(0, 0)), Ok(1));
        assert_eq!(two.leg(Cell::new(0, 0)), Ok(0));
        let square = p(&[2, 2]);
        assert_eq!(square.arm(Cell::new(0, 0)), Ok(1));
        assert_eq!(square.leg(Cell::new(0, 0)), Ok(1));
        assert_eq!(
            two.leg(Cell::new(1, 0)),
            Err(Error::BoxNotInPartition { row: 1, col: 0 })
        );
        assert!(two.arm(Cell::new(0, 2)).is_err());
    }

    #[test]
    fn covers_examples() {
        assert_eq!(Partition::empty().covers(), vec![p(&[1])]);
        assert_eq!(p(&[1]).covers(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(p(&[2, 1]).covers(), vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]);
    }

    #[test]
    fn cocovers_examples() {
        assert_eq!(p(&[1]).cocovers(), Ok(vec![Partition::empty()]));
        assert_eq!(p(&[2, 1]).cocovers(), Ok(vec![p(&[1, 1]), p(&[2])]));
        assert_eq!(p(&[2, 2]).cocovers(), Ok(vec![p(&[2, 1])]));
        assert_eq!(Partition::empty().cocovers(), Err(Error::NoCocovers));
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", p(&[3, 1, 1])), "(3,1,1)");
        assert_eq!(alloc::format!("{}", Partition::empty()), "()");
    }
}
