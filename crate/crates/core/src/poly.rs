//! Exact polynomials and truncated bivariate series with arbitrary-precision
//! integer coefficients.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Poincaré polynomial in `q`, stored by even degree `2d`.
///
/// Zero coefficients are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PoincarePoly {
    coefficients: BTreeMap<u32, BigUint>,
}

impl PoincarePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_cell(0);
        p
    }

    /// Builds from Betti numbers `[b0, b2, b4, ...]`.
    pub fn from_even_betti<I, T>(betti: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        let mut p = Self::zero();
        for (d, b) in betti.into_iter().enumerate() {
            p.add_term(2 * d as u32, b.into());
        }
        p
    }

    /// Adds `q^{2 * cell_dim}`.
    pub fn add_cell(&mut self, cell_dim: u32) {
        self.add_term(2 * cell_dim, BigUint::one());
    }

    pub fn add_term(&mut self, degree: u32, coefficient: BigUint) {
        debug_assert!(degree.is_multiple_of(2), "odd degree {degree}");
        if coefficient.is_zero() {
            return;
        }
        *self.coefficients.entry(degree).or_default() += coefficient;
    }

    pub fn coefficient(&self, degree: u32) -> BigUint {
        self.coefficients.get(&degree).cloned().unwrap_or_default()
    }

    /// Nonzero `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigUint)> {
        self.coefficients.iter().map(|(&d, c)| (d, c))
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.coefficients.keys().next_back().copied()
    }

    /// Value at `q = 1`, the Euler characteristic.
    pub fn eval_at_one(&self) -> BigUint {
        self.coefficients.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }
}

impl core::ops::AddAssign<&PoincarePoly> for PoincarePoly {
    fn add_assign(&mut self, rhs: &PoincarePoly) {
        for (&d, c) in &rhs.coefficients {
            self.add_term(d, c.clone());
        }
    }
}

impl PoincarePoly {
    /// Renders like `1 + q^2 + 2q^4` with `var` in place of `q`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (degree, c)) in self.terms().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let term = match (degree, c.is_one()) {
                (0, _) => format!("{c}"),
                (_, true) => format!("{var}^{degree}"),
                (_, false) => format!("{c}{var}^{degree}"),
            };
            out.push_str(&term);
        }
        out
    }
}

impl fmt::Display for PoincarePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

/// Truncated formal series in `t` and `u`.
///
/// Every coefficient with `t`-degree above the truncation order is dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    order: u32,
    coefficients: BTreeMap<(u32, u32), BigInt>,
}

impl GradedSeries {
    pub fn zero(order: u32) -> Self {
        GradedSeries { order, coefficients: BTreeMap::new() }
    }

    pub fn one(order: u32) -> Self {
        let mut s = Self::zero(order);
        s.add_term(0, 0, BigInt::one());
        s
    }

    /// `1 / (1 - t^a u^b) = sum_k t^{ka} u^{kb}`, truncated. Needs `a >= 1`.
    pub fn geometric(order: u32, t_step: u32, u_step: u32) -> Self {
        assert!(t_step >= 1, "geometric factor needs positive t-degree");
        let mut s = Self::zero(order);
        let mut k = 0;
        while k * t_step <= order {
            s.add_term(k * t_step, k * u_step, BigInt::one());
            k += 1;
        }
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn add_term(&mut self, t_deg: u32, u_deg: u32, coefficient: BigInt) {
        if t_deg > self.order || coefficient.is_zero() {
            return;
        }
        let entry = self.coefficients.entry((t_deg, u_deg)).or_default();
        *entry += coefficient;
        if entry.is_zero() {
            self.coefficients.remove(&(t_deg, u_deg));
        }
    }

    pub fn coefficient(&self, t_deg: u32, u_deg: u32) -> BigInt {
        self.coefficients.get(&(t_deg, u_deg)).cloned().unwrap_or_default()
    }

    /// Nonzero `((t, u), coefficient)` entries in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.coefficients.iter().map(|(&k, c)| (k, c))
    }

    /// The coefficient of `t^n` as a map from `u`-degree to coefficient.
    pub fn t_slice(&self, t_deg: u32) -> BTreeMap<u32, BigInt> {
        self.coefficients
            .range((t_deg, 0)..=(t_deg, u32::MAX))
            .map(|(&(_, u), c)| (u, c.clone()))
            .collect()
    }

    /// The `t^n` slice read as a polynomial in `q = u`. `None` if a
    /// coefficient is negative or sits in odd degree.
    pub fn t_slice_poly(&self, t_deg: u32) -> Option<PoincarePoly> {
        let mut p = PoincarePoly::zero();
        for (u, c) in self.t_slice(t_deg) {
            if u % 2 != 0 {
                return None;
            }
            p.add_term(u, c.to_biguint()?);
        }
        Some(p)
    }

    /// Coefficients of the `u = 1` specialization, indexed by `t`-degree.
    pub fn at_u_one(&self) -> Vec<BigInt> {
        let mut out = alloc::vec![BigInt::zero(); self.order as usize + 1];
        for (&(t, _), c) in &self.coefficients {
            out[t as usize] += c;
        }
        out
    }

    /// Truncated product; the result keeps the smaller truncation order.
    pub fn mul(&self, other: &GradedSeries) -> GradedSeries {
        let order = self.order.min(other.order);
        let mut out = GradedSeries::zero(order);
        for (&(t1, u1), c1) in &self.coefficients {
            if t1 > order {
                break;
            }
            for (&(t2, u2), c2) in &other.coefficients {
                if t1 + t2 > order {
                    break;
                }
                out.add_term(t1 + t2, u1 + u2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn poincare_display() {
        assert_eq!(PoincarePoly::zero().to_string(), "0");
        assert_eq!(PoincarePoly::one().to_string(), "1");
        let p = PoincarePoly::from_even_betti([1u32, 1, 2, 1]);
        assert_eq!(p.to_string(), "1 + q^2 + 2q^4 + q^6");
        assert_eq!(p.eval_at_one(), BigUint::from(5u32));
        assert_eq!(p.top_degree(), Some(6));
        assert_eq!(p.render("u"), "1 + u^2 + 2u^4 + u^6");
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let p = PoincarePoly::from_even_betti([1u32, 0, 1]);
        assert_eq!(p.terms().count(), 2);
        assert_eq!(p, {
            let mut q = PoincarePoly::one();
            q.add_cell(2);
            q
        });
    }

    #[test]
    fn geometric_times_one_minus_is_one() {
        let g = GradedSeries::geometric(6, 2, 3);
        let mut one_minus = GradedSeries::one(6);
        one_minus.add_term(2, 3, BigInt::from(-1));
        assert_eq!(g.mul(&one_minus), GradedSeries::one(6));
    }

    #[test]
    fn truncation_and_slices() {
        let g = GradedSeries::geometric(3, 1, 2);
        let sq = g.mul(&g);
        // 1/(1-x)^2 has coefficients 1, 2, 3, 4.
        assert_eq!(sq.coefficient(3, 6), BigInt::from(4));
        assert_eq!(sq.coefficient(4, 8), BigInt::zero());
        assert_eq!(sq.at_u_one(), [1, 2, 3, 4].map(BigInt::from).to_vec());
        assert_eq!(sq.t_slice_poly(2).unwrap().to_string(), "3q^4");
    }
}
