//! Torus weights at monomial fixed points and Bialynicki-Birula cells.
//!
//! A two-dimensional torus acts on each affine chart `Spec k[x, y]` with
//! `x` of weight `u` and `y` of weight `v`. At the fixed point of a
//! partition `λ` the tangent space of the Hilbert scheme splits into `2|λ|`
//! characters, two per box:
//!
//! ```text
//! (arm + 1) u - leg v        and        -arm u + (leg + 1) v
//! ```
//!
//! A generic one-parameter subgroup `ρ` in the positive quadrant gives
//! cells whose dimension is the number of weights with negative pairing.

use alloc::vec::Vec;
use core::fmt;

use crate::partition::{enumerate_partitions, Partition};
use crate::poly::PoincarePoly;
use crate::{Error, Result};

/// An integer character `s^a t^b` of the torus, written `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharVector {
    pub a: i64,
    pub b: i64,
}

impl CharVector {
    pub const fn new(a: i64, b: i64) -> Self {
        CharVector { a, b }
    }

    pub fn pair(&self, other: &CharVector) -> i64 {
        self.a * other.a + self.b * other.b
    }

    pub fn scale(&self, k: i64) -> CharVector {
        CharVector::new(k * self.a, k * self.b)
    }

    fn is_independent_of(&self, other: &CharVector) -> bool {
        self.a * other.b - self.b * other.a != 0
    }
}

impl core::ops::Add for CharVector {
    type Output = CharVector;

    fn add(self, rhs: CharVector) -> CharVector {
        CharVector::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl fmt::Display for CharVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

pub type TangentWeightList = Vec<CharVector>;

/// Weights of the two affine coordinates on the three torus charts of P².
pub const P2_CHARTS: [(CharVector, CharVector); 3] = [
    (CharVector::new(1, 0), CharVector::new(0, 1)),
    (CharVector::new(-1, 0), CharVector::new(-1, 1)),
    (CharVector::new(0, -1), CharVector::new(1, -1)),
];

/// The standard chart of the affine plane.
pub const AFFINE_CHART: (CharVector, CharVector) = P2_CHARTS[0];

pub fn tangent_weights(shape: &Partition, u: CharVector, v: CharVector) -> Result<TangentWeightList> {
    if !u.is_independent_of(&v) {
        return Err(Error::DegenerateChart);
    }
    let mut weights = Vec::with_capacity(2 * shape.size());
    for cell in shape.cells() {
        let arm = shape.arm(cell)? as i64;
        let leg = shape.leg(cell)? as i64;
        weights.push(u.scale(arm + 1) + v.scale(-leg));
        weights.push(u.scale(-arm) + v.scale(leg + 1));
    }
    Ok(weights)
}

/// Dimension of the attracting cell: how many weights pair negatively with `rho`.
pub fn cell_dimension(weights: &[CharVector], rho: CharVector) -> Result<usize> {
    let mut negative = 0;
    for w in weights {
        match w.pair(&rho) {
            0 => return Err(Error::NonGenericSubgroup { weight: (w.a, w.b), rho: (rho.a, rho.b) }),
            p if p < 0 => negative += 1,
            _ => {}
        }
    }
    Ok(negative)
}

/// Betti numbers of `Hilb^n(C²)` from the cells of the standard chart.
pub fn poincare_affine(n: usize, rho: CharVector) -> Result<PoincarePoly> {
    let (u, v) = AFFINE_CHART;
    let mut poly = PoincarePoly::zero();
    for shape in enumerate_partitions(n) {
        let weights = tangent_weights(&shape, u, v)?;
        poly.add_cell(cell_dimension(&weights, rho)? as u32);
    }
    Ok(poly)
}

/// A torus-fixed point of `Hilb^n(P²)`: one monomial ideal per fixed point
/// of P², each read in its own chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartTuple {
    pub partitions: [Partition; 3],
    pub chart_weights: [(CharVector, CharVector); 3],
}

impl ChartTuple {
    pub fn size(&self) -> usize {
        self.partitions.iter().map(Partition::size).sum()
    }

    /// All `2n` tangent weights, chart by chart.
    pub fn tangent_weights(&self) -> Result<TangentWeightList> {
        let mut all = Vec::with_capacity(2 * self.size());
        for (shape, &(u, v)) in self.partitions.iter().zip(&self.chart_weights) {
            all.extend(tangent_weights(shape, u, v)?);
        }
        Ok(all)
    }
}

/// Fixed points of `Hilb^n(P²)`, ordered by the chart sizes
/// `(|λ⁰|, |λ¹|)` ascending and then by partition enumeration order.
pub fn fixed_points_p2(n: usize) -> Vec<ChartTuple> {
    let by_size: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    for s0 in 0..=n {
        for s1 in 0..=n - s0 {
            let s2 = n - s0 - s1;
            for l0 in &by_size[s0] {
                for l1 in &by_size[s1] {
                    for l2 in &by_size[s2] {
                        out.push(ChartTuple {
                            partitions: [l0.clone(), l1.clone(), l2.clone()],
                            chart_weights: P2_CHARTS,
                        });
                    }
                }
            }
        }
    }
    out
}

pub fn poincare_p2(n: usize, rho: CharVector) -> Result<PoincarePoly> {
    let mut poly = PoincarePoly::zero();
    for point in fixed_points_p2(n) {
        poly.add_cell(cell_dimension(&point.tangent_weights()?, rho)? as u32);
    }
    Ok(poly)
}

/// Cell dimensions of the punctual Hilbert scheme `M_n(P)`, one per
/// partition in enumeration order: `n - λ₁`.
pub fn punctual_cell_dims(n: usize) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::PunctualUndefined);
    }
    Ok(enumerate_partitions(n).iter().map(|l| n - l.largest_part()).collect())
}

pub fn poincare_punctual(n: usize) -> Result<PoincarePoly> {
    let mut poly = PoincarePoly::zero();
    for d in punctual_cell_dims(n)? {
        poly.add_cell(d as u32);
    }
    Ok(poly)
}

/// A one-parameter subgroup picked automatically, with the candidates that
/// were rejected on the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoChoice {
    pub rho: CharVector,
    pub rejected: Vec<CharVector>,
}

/// First `ρ = (1, K)` with `K > 2n²` pairing nonzero with every weight.
pub fn choose_rho<'a, I>(n: usize, weights: I) -> RhoChoice
where
    I: IntoIterator<Item = &'a CharVector>,
    I::IntoIter: Clone,
{
    let weights = weights.into_iter();
    let mut k = 2 * (n as i64) * (n as i64) + 1;
    let mut rejected = Vec::new();
    loop {
        let rho = CharVector::new(1, k);
        if weights.clone().all(|w| w.pair(&rho) != 0) {
            return RhoChoice { rho, rejected };
        }
        rejected.push(rho);
        k += 1;
    }
}

/// Default subgroup for the affine plane at size `n`.
pub fn default_rho_affine(n: usize) -> Result<RhoChoice> {
    let (u, v) = AFFINE_CHART;
    let mut weights = Vec::new();
    for shape in enumerate_partitions(n) {
        weights.extend(tangent_weights(&shape, u, v)?);
    }
    Ok(choose_rho(n, &weights))
}

/// Default subgroup for P² at size `n`.
pub fn default_rho_p2(n: usize) -> Result<RhoChoice> {
    let mut weights = Vec::new();
    for point in fixed_points_p2(n) {
        weights.extend(point.tangent_weights()?);
    }
    weights.sort();
    weights.dedup();
    Ok(choose_rho(n, &weights))
}
