//! A bosonic Fock space for the Heisenberg algebra attached to the even
//! cohomology of a surface.
//!
//! States are polynomials in commuting creation generators `a_{-m}(γ)`
//! (`m >= 1`, `γ` a basis class) applied to the vacuum. The annihilator
//! `a_m(α)` is the derivation sending `a_{-k}(β)` to `δ_{mk} c_m ⟨α, β⟩`,
//! with `c_m` taken from the blow-up recurrence.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::goettsche::{creation_u_degree, SurfaceModel};
use crate::nakajima::{nakajima_closed_form, nakajima_recurrence, NakajimaSequence};
use crate::{Error, Result};

/// The creation generator `a_{-level}(class)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub level: u32,
    pub class: usize,
}

/// A product of generators, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FockMonomial(Vec<Generator>);

impl FockMonomial {
    pub fn vacuum() -> Self {
        FockMonomial(Vec::new())
    }

    pub fn from_generators(mut generators: Vec<Generator>) -> Self {
        generators.sort_unstable();
        FockMonomial(generators)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    fn times(&self, g: Generator) -> Self {
        let mut out = self.0.clone();
        let at = out.partition_point(|x| *x <= g);
        out.insert(at, g);
        FockMonomial(out)
    }

    /// Distinct generators with their exponents.
    fn exponents(&self) -> impl Iterator<Item = (Generator, usize)> + '_ {
        let mut i = 0;
        core::iter::from_fn(move || {
            let g = *self.0.get(i)?;
            let run = self.0[i..].iter().take_while(|&&x| x == g).count();
            i += run;
            Some((g, run))
        })
    }

    fn without_one(&self, g: Generator) -> Self {
        let mut out = self.0.clone();
        if let Some(pos) = out.iter().position(|&x| x == g) {
            out.remove(pos);
        }
        FockMonomial(out)
    }

    pub fn t_weight(&self) -> u32 {
        self.0.iter().map(|g| g.level).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockState {
    terms: BTreeMap<FockMonomial, BigInt>,
}

impl FockState {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::monomial(FockMonomial::vacuum())
    }

    pub fn monomial(m: FockMonomial) -> Self {
        let mut s = Self::zero();
        s.add_term(m, BigInt::one());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &FockMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: FockMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scaled(&self, k: &BigInt) -> FockState {
        let mut out = FockState::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn sub(&self, other: &FockState) -> FockState {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for g in m.generators() {
                write!(f, "·a[-{}]({})", g.level, g.class)?;
            }
            f.write_str("|0>")?;
        }
        Ok(())
    }
}

pub struct FockSpace<'a> {
    surface: &'a SurfaceModel,
    constants: NakajimaSequence,
}

impl<'a> FockSpace<'a> {
    /// A Fock space whose annihilators are defined up to `max_level`.
    pub fn new(surface: &'a SurfaceModel, max_level: u32) -> Result<Self> {
        let constants = nakajima_recurrence(i64::from(max_level.max(1)))?;
        Ok(FockSpace { surface, constants })
    }

    pub fn surface(&self) -> &SurfaceModel {
        self.surface
    }

    pub fn max_level(&self) -> usize {
        self.constants.len()
    }

    fn generator(&self, level: i64, class: usize) -> Result<Generator> {
        if level < 1 {
            return Err(Error::InvalidLevel(level));
        }
        self.surface.degree(class)?;
        let level = u32::try_from(level).map_err(|_| Error::InvalidLevel(level))?;
        Ok(Generator { level, class })
    }

    /// `(t, u)` bidegree of a monomial.
    pub fn bidegree(&self, m: &FockMonomial) -> (u32, u32) {
        m.generators().iter().fold((0, 0), |(t, u), g| {
            let d = self.surface.basis()[g.class].degree;
            (t + g.level, u + creation_u_degree(g.level, d))
        })
    }

    /// Multiplication by `a_{-level}(class)`.
    pub fn create(&self, state: &FockState, level: i64, class: usize) -> Result<FockState> {
        let g = self.generator(level, class)?;
        let mut out = FockState::zero();
        for (m, c) in state.terms() {
            out.add_term(m.times(g), c.clone());
        }
        Ok(out)
    }

    /// The derivation `a_{level}(class)`.
    pub fn annihilate(&self, state: &FockState, level: i64, class: usize) -> Result<FockState> {
        let g = self.generator(level, class)?;
        let c_m = self
            .constants
            .get(g.level as usize)
            .ok_or(Error::InvalidLevel(level))?
            .clone();
        let mut out = FockState::zero();
        for (m, coeff) in state.terms() {
            for (h, exponent) in m.exponents() {
                if h.level != g.level {
                    continue;
                }
                let pairing = self.surface.pairing(g.class, h.class)?;
                if pairing == 0 {
                    continue;
                }
                let value = coeff * &c_m * pairing * exponent;
                out.add_term(m.without_one(h), value);
            }
        }
        Ok(out)
    }

    /// Every monomial of `t`-weight exactly `n`, in sorted order.
    pub fn basis_monomials(&self, n: u32) -> Vec<FockMonomial> {
        let classes = self.surface.basis().len();
        let generators: Vec<Generator> = (1..=n)
            .flat_map(|level| (0..classes).map(move |class| Generator { level, class }))
            .collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        collect_monomials(&generators, 0, n, &mut current, &mut out);
        out.sort();
        out
    }

    /// Basis monomials of every `t`-weight up to `max_t`, as states.
    pub fn probes(&self, max_t: u32) -> Vec<FockState> {
        (0..=max_t)
            .flat_map(|n| self.basis_monomials(n))
            .map(FockState::monomial)
            .collect()
    }

    /// Checks `[a_m(α), a_{-k}(β)] = δ_{mk} c_m ⟨α, β⟩` on every probe, with
    /// `c_m = (-1)^{m-1} m`.
    pub fn commutator_check(
        &self,
        m: i64,
        k: i64,
        alpha: usize,
        beta: usize,
        probes: &[FockState],
    ) -> Result<CommutatorReport> {
        let pairing = self.surface.pairing(alpha, beta)?;
        let expected = if m == k { nakajima_closed_form(m)? * pairing } else { BigInt::zero() };
        let mut failures = Vec::new();
        for (index, probe) in probes.iter().enumerate() {
            let created = self.create(probe, k, beta)?;
            let lhs = self
                .annihilate(&created, m, alpha)?
                .sub(&self.create(&self.annihilate(probe, m, alpha)?, k, beta)?);
            if lhs != probe.scaled(&expected) {
                failures.push(index);
            }
        }
        Ok(CommutatorReport { m, k, alpha, beta, expected, probes: probes.len(), failures })
    }
}

fn collect_monomials(
    generators: &[Generator],
    start: usize,
    remaining: u32,
    current: &mut Vec<Generator>,
    out: &mut Vec<FockMonomial>,
) {
    if remaining == 0 {
        out.push(FockMonomial::from_generators(current.clone()));
        return;
    }
    for (i, &g) in generators.iter().enumerate().skip(start) {
        if g.level > remaining {
            continue;
        }
        current.push(g);
        collect_monomials(generators, i, remaining - g.level, current, out);
        current.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorReport {
    pub m: i64,
    pub k: i64,
    pub alpha: usize,
    pub beta: usize,
    /// `δ_{mk} (-1)^{m-1} m ⟨α, β⟩`.
    pub expected: BigInt,
    pub probes: usize,
    /// Indices of probes where the commutator was not the expected scalar.
    pub failures: Vec<usize>,
}

impl CommutatorReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
