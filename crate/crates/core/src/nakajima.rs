//! The Nakajima constants `c_n = ∫ [M_n]·[M_n(P)]`, by replaying the
//! incidence-variety recurrence and by the closed form `(-1)^{n-1} n`.
//!
//! Pulling both classes back along `g: H_{n,n+1} → H_{n+1}` and rewriting
//! them through the exceptional divisor `E` gives
//!
//! ```text
//! c_{n+1} · deg(g) / a²  =  c_n · ∫_F E² / b²
//! ```
//!
//! with `a = n + 1` the multiplicity of `g^*[M_{n+1}]` along `M_{n,n+1}`,
//! `b = n` the multiplicity of `[E]·f^*[M_n]`, `deg(g) = n + 1`, and `F`
//! the surface blown up at `n` points.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::equivariant::punctual_cell_dims;
use crate::lattice::{exceptional_total_square, IntersectionLattice};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NakajimaSequence {
    values: Vec<BigInt>,
}

impl NakajimaSequence {
    /// `c_1, ..., c_N`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `c_n` for `1 <= n <= N`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Inputs of one step `n → n + 1` of the recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceStep {
    pub n: u64,
    pub pullback_multiplicity: u64,
    pub exceptional_multiplicity: u64,
    pub degree_of_g: u64,
    pub exceptional_square: i64,
    pub next: BigInt,
}

fn step(n: u64, c_n: &BigInt, fiber_base: &IntersectionLattice) -> Result<RecurrenceStep> {
    let exceptional_square = exceptional_total_square(n as i64, fiber_base)?;
    advance(n, c_n, exceptional_square)
}

fn advance(n: u64, c_n: &BigInt, exceptional_square: i64) -> Result<RecurrenceStep> {
    let pullback_multiplicity = n + 1;
    let exceptional_multiplicity = n;
    let degree_of_g = n + 1;

    let a = BigInt::from(pullback_multiplicity);
    let b = BigInt::from(exceptional_multiplicity);
    let rhs = BigRational::new(c_n * exceptional_square, &b * &b);
    let next = rhs * BigRational::new(&a * &a, BigInt::from(degree_of_g));
    if !next.is_integer() {
        return Err(Error::NonIntegral { step: n + 1 });
    }
    Ok(RecurrenceStep {
        n,
        pullback_multiplicity,
        exceptional_multiplicity,
        degree_of_g,
        exceptional_square,
        next: next.to_integer(),
    })
}

/// Every step of the recurrence from `c_1 = 1` up to `c_count`.
pub fn nakajima_trace(count: i64) -> Result<(NakajimaSequence, Vec<RecurrenceStep>)> {
    if count < 1 {
        return Err(Error::InvalidLength(count));
    }
    let base = IntersectionLattice::projective_plane();
    let mut values = Vec::with_capacity(count as usize);
    let mut steps = Vec::with_capacity(count as usize - 1);
    values.push(BigInt::one());
    for n in 1..count as u64 {
        let s = step(n, &values[n as usize - 1], &base)?;
        values.push(s.next.clone());
        steps.push(s);
    }
    Ok((NakajimaSequence { values }, steps))
}

pub fn nakajima_recurrence(count: i64) -> Result<NakajimaSequence> {
    nakajima_trace(count).map(|(seq, _)| seq)
}

/// `(-1)^{n-1} n`.
pub fn nakajima_closed_form(n: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::InvalidLength(n));
    }
    let magnitude = BigInt::from(n);
    Ok(if n % 2 == 1 { magnitude } else { -magnitude })
}

/// `(dim M_n, dim M_n(P))`, with the punctual dimension read off the top
/// punctual cell and `M_n` fibred over the surface. The two must be
/// complementary in the `2n`-dimensional `H_n`.
pub fn complementary_dimensions(n: usize) -> Result<(usize, usize)> {
    let punctual = punctual_cell_dims(n)?.into_iter().max().unwrap_or(0);
    let supported = punctual + 2;
    if punctual + supported != 2 * n {
        return Err(Error::InvariantViolation(alloc::format!(
            "dim M_{n} + dim M_{n}(P) = {} != {}",
            punctual + supported,
            2 * n
        )));
    }
    Ok((supported, punctual))
}

/// Checks the basic shape of a sequence: `c_1 = 1`, `|c_n| = n`, alternating signs.
pub fn has_expected_shape(seq: &NakajimaSequence) -> bool {
    seq.values.first().is_some_and(One::is_one)
        && seq.values.iter().enumerate().all(|(i, c)| *c.abs().magnitude() == (i as u64 + 1).into())
        && seq.values.windows(2).all(|w| w[0].signum() == -w[1].signum())
}
