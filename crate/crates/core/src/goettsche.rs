//! Betti generating series of the Hilbert schemes of a surface with even
//! cohomology, computed two ways: as Göttsche's infinite product and as the
//! graded character of a free bosonic Fock space.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::enumerate_partitions;
use crate::poly::GradedSeries;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub label: String,
    /// Cohomological degree: 0, 2 or 4.
    pub degree: u32,
}

/// Betti numbers and intersection pairing of a surface with `b1 = b3 = 0`.
///
/// The cohomology basis is `1`, then the `b2` classes of `H²`, then `pt`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    betti: [u32; 5],
    basis: Vec<BasisElement>,
    pairing: Vec<Vec<i64>>,
}

impl SurfaceModel {
    /// Uses the odd unimodular form `diag(1, -1, ..., -1)` on `H²`.
    pub fn new(betti: [u32; 5]) -> Result<Self> {
        let b2 = betti[2] as usize;
        let mut form = vec![vec![0; b2]; b2];
        for (i, row) in form.iter_mut().enumerate() {
            row[i] = if i == 0 { 1 } else { -1 };
        }
        Self::with_h2_form(betti, form)
    }

    pub fn with_h2_form(betti: [u32; 5], h2_form: Vec<Vec<i64>>) -> Result<Self> {
        if betti[1] != betti[3] {
            return Err(Error::InvalidSurface(format!(
                "b1 = {} and b3 = {} violate Poincaré duality",
                betti[1], betti[3]
            )));
        }
        if betti[1] != 0 {
            return Err(Error::OddCohomology);
        }
        if betti[0] != 1 || betti[4] != 1 {
            return Err(Error::InvalidSurface(format!(
                "a connected surface has b0 = b4 = 1, got {} and {}",
                betti[0], betti[4]
            )));
        }
        let b2 = betti[2] as usize;
        if h2_form.len() != b2 || h2_form.iter().any(|r| r.len() != b2) {
            return Err(Error::InvalidSurface(format!("H² form must be {b2} x {b2}")));
        }
        for i in 0..b2 {
            for j in 0..i {
                if h2_form[i][j] != h2_form[j][i] {
                    return Err(Error::InvalidSurface("H² form is not symmetric".into()));
                }
            }
        }

        let rank = b2 + 2;
        let mut basis = Vec::with_capacity(rank);
        basis.push(BasisElement { label: "1".into(), degree: 0 });
        for k in 0..b2 {
            let label = if b2 == 1 { "h".into() } else { format!("h{}", k + 1) };
            basis.push(BasisElement { label, degree: 2 });
        }
        basis.push(BasisElement { label: "pt".into(), degree: 4 });

        let mut pairing = vec![vec![0; rank]; rank];
        pairing[0][rank - 1] = 1;
        pairing[rank - 1][0] = 1;
        for i in 0..b2 {
            pairing[i + 1][1..=b2].copy_from_slice(&h2_form[i]);
        }
        Ok(SurfaceModel { betti, basis, pairing })
    }

    pub fn projective_plane() -> Self {
        Self::new([1, 0, 1, 0, 1]).expect("valid Betti numbers")
    }

    /// Betti numbers of a K3 surface, with the default `H²` form.
    pub fn k3_shaped() -> Self {
        Self::new([1, 0, 22, 0, 1]).expect("valid Betti numbers")
    }

    pub fn betti(&self) -> [u32; 5] {
        self.betti
    }

    pub fn euler_characteristic(&self) -> u32 {
        self.betti.iter().sum()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn degree(&self, index: usize) -> Result<u32> {
        self.basis.get(index).map(|b| b.degree).ok_or(Error::InvalidBasisElement(index))
    }

    pub fn pairing(&self, a: usize, b: usize) -> Result<i64> {
        self.degree(a)?;
        self.degree(b)?;
        Ok(self.pairing[a][b])
    }
}

/// `u`-degree of a level-`m` creation operator on a class of degree `d`.
pub(crate) fn creation_u_degree(level: u32, degree: u32) -> u32 {
    2 * level - 2 + degree
}

/// `∏_{m >= 1} ∏_{d} (1 - t^m u^{2m-2+d})^{-b_d}` through `t^order`,
/// by iterated truncated multiplication.
pub fn goettsche_series(surface: &SurfaceModel, order: u32) -> GradedSeries {
    let mut series = GradedSeries::one(order);
    for m in 1..=order {
        for d in [0u32, 2, 4] {
            let factor = GradedSeries::geometric(order, m, creation_u_degree(m, d));
            for _ in 0..surface.betti[d as usize] {
                series = series.mul(&factor);
            }
        }
    }
    series
}

/// Number of size-`k` multisets from `b` kinds.
fn multichoose(b: u64, k: u64) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if b == 0 {
        return BigInt::zero();
    }
    let n = b + k - 1;
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Graded dimension of the Fock space through `t^order`.
///
/// A monomial is a partition of its `t`-weight into levels together with,
/// for each level `m` of multiplicity `k`, a size-`k` multiset of basis
/// classes. Multisets are counted by stars and bars within each degree.
pub fn fock_character(surface: &SurfaceModel, order: u32) -> GradedSeries {
    let mut character = GradedSeries::zero(order);
    for n in 0..=order {
        for levels in enumerate_partitions(n as usize) {
            let mut by_u: Vec<(u32, BigInt)> = vec![(0, BigInt::one())];
            let mut parts = levels.parts().iter().peekable();
            while let Some(&m) = parts.next() {
                let mut multiplicity = 1;
                while parts.next_if_eq(&&m).is_some() {
                    multiplicity += 1;
                }
                by_u = convolve(&by_u, &level_counts(surface, m as u32, multiplicity));
            }
            for (u, count) in by_u {
                character.add_term(n, u, count);
            }
        }
    }
    character
}

/// `(u-degree, count)` of the multisets of `k` level-`m` generators.
fn level_counts(surface: &SurfaceModel, m: u32, k: u32) -> Vec<(u32, BigInt)> {
    let [b0, _, b2, _, b4] = surface.betti.map(u64::from);
    let mut out = Vec::new();
    for k0 in 0..=k {
        for k2 in 0..=k - k0 {
            let k4 = k - k0 - k2;
            let count = multichoose(b0, k0.into()) * multichoose(b2, k2.into()) * multichoose(b4, k4.into());
            if count.is_zero() {
                continue;
            }
            let u = k0 * creation_u_degree(m, 0) + k2 * creation_u_degree(m, 2) + k4 * creation_u_degree(m, 4);
            out.push((u, count));
        }
    }
    out
}

fn convolve(a: &[(u32, BigInt)], b: &[(u32, BigInt)]) -> Vec<(u32, BigInt)> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (ua, ca) in a {
        for (ub, cb) in b {
            out.push((ua + ub, ca * cb));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slice(s: &GradedSeries, n: u32) -> Vec<(u32, i64)> {
        s.t_slice(n).into_iter().map(|(u, c)| (u, i64::try_from(c).unwrap())).collect()
    }

    #[test]
    fn p2_series_low_orders() {
        let s = goettsche_series(&SurfaceModel::projective_plane(), 3);
        assert_eq!(slice(&s, 0), [(0, 1)]);
        assert_eq!(slice(&s, 1), [(0, 1), (2, 1), (4, 1)]);
        assert_eq!(slice(&s, 2), [(0, 1), (2, 2), (4, 3), (6, 2), (8, 1)]);
        assert_eq!(s.at_u_one(), [1, 3, 9, 22].map(BigInt::from).to_vec());
    }

    #[test]
    fn character_low_orders() {
        let p2 = SurfaceModel::projective_plane();
        let c = fock_character(&p2, 3);
        assert_eq!(slice(&c, 0), [(0, 1)]);
        assert_eq!(slice(&c, 1), [(0, 1), (2, 1), (4, 1)]);
        assert_eq!(c, goettsche_series(&p2, 3));
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multichoose(0, 0), BigInt::one());
        assert_eq!(multichoose(0, 3), BigInt::zero());
        assert_eq!(multichoose(3, 2), BigInt::from(6));
        assert_eq!(multichoose(22, 3), BigInt::from(2024));
    }

    #[test]
    fn model_without_h2_classes() {
        let s = SurfaceModel::new([1, 0, 0, 0, 1]).unwrap();
        assert_eq!(fock_character(&s, 4), goettsche_series(&s, 4));
    }

    #[test]
    fn surface_validation() {
        assert_eq!(SurfaceModel::new([1, 2, 1, 2, 1]), Err(Error::OddCohomology));
        assert!(matches!(SurfaceModel::new([1, 0, 1, 1, 1]), Err(Error::InvalidSurface(_))));
        assert!(matches!(SurfaceModel::new([2, 0, 1, 0, 1]), Err(Error::InvalidSurface(_))));
        assert!(SurfaceModel::with_h2_form([1, 0, 2, 0, 1], vec![vec![0, 1], vec![2, 0]]).is_err());
    }

    #[test]
    fn p2_basis_and_pairing() {
        let p2 = SurfaceModel::projective_plane();
        let labels: Vec<_> = p2.basis().iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, ["1", "h", "pt"]);
        assert_eq!(p2.pairing(0, 2), Ok(1));
        assert_eq!(p2.pairing(1, 1), Ok(1));
        assert_eq!(p2.pairing(0, 0), Ok(0));
        assert_eq!(p2.pairing(0, 3), Err(Error::InvalidBasisElement(3)));
        assert_eq!(SurfaceModel::k3_shaped().basis().len(), 24);
    }
}
