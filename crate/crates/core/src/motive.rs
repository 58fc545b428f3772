//! The universal coefficient ring `Z[L, s1, s2, ...]`.
//!
//! `L` stands for the Lefschetz motive and `s_n` for the class of the n-th
//! symmetric power of the curve. The ring is free: no relations between the
//! generators are imposed, so `s1*s1` stays `s1^2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::ring::{write_signed_term, CoefficientRing};
use crate::text::{parse_sum, power_str};

/// A monomial `L^a * s_{i1}^{e1} * ...`.
///
/// `sym` is sorted by index, with positive indices and positive powers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    lefschetz: u32,
    sym: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn lefschetz_pow(a: u32) -> Self {
        Self { lefschetz: a, sym: Vec::new() }
    }

    /// `s_n`; `s_0` is the unit.
    pub fn sym(n: u32) -> Self {
        if n == 0 {
            Self::one()
        } else {
            Self { lefschetz: 0, sym: vec![(n, 1)] }
        }
    }

    pub fn lefschetz_exp(&self) -> u32 {
        self.lefschetz
    }

    /// `(index, power)` pairs of the symmetric-power generators.
    pub fn sym_factors(&self) -> &[(u32, u32)] {
        &self.sym
    }

    /// Number of generator factors counted with multiplicity.
    pub fn degree(&self) -> u32 {
        self.lefschetz + self.sym.iter().map(|&(_, p)| p).sum::<u32>()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut sym = Vec::with_capacity(self.sym.len() + other.sym.len());
        let (mut i, mut j) = (0, 0);
        while i < self.sym.len() || j < other.sym.len() {
            match (self.sym.get(i), other.sym.get(j)) {
                (Some(&a), Some(&b)) if a.0 == b.0 => {
                    sym.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
                (Some(&a), Some(&b)) if a.0 < b.0 => {
                    sym.push(a);
                    i += 1;
                }
                (Some(_), Some(&b)) => {
                    sym.push(b);
                    j += 1;
                }
                (Some(&a), None) => {
                    sym.push(a);
                    i += 1;
                }
                (None, Some(&b)) => {
                    sym.push(b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Self { lefschetz: self.lefschetz + other.lefschetz, sym }
    }

    fn sym_exp(&self, index: u32) -> u32 {
        self.sym
            .iter()
            .find(|&&(i, _)| i == index)
            .map_or(0, |&(_, p)| p)
    }

    /// Graded order with `L` before `s1` before `s2`: lower degree first,
    /// then larger exponents of earlier generators first.
    fn display_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(other.lefschetz.cmp(&self.lefschetz))
            .then_with(|| {
                let top = self
                    .sym
                    .last()
                    .map_or(0, |s| s.0)
                    .max(other.sym.last().map_or(0, |s| s.0));
                (1..=top)
                    .map(|i| other.sym_exp(i).cmp(&self.sym_exp(i)))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
    }

    fn render(&self) -> String {
        let mut factors = Vec::new();
        if self.lefschetz > 0 {
            factors.push(power_str("L", self.lefschetz));
        }
        for &(i, p) in &self.sym {
            factors.push(power_str(&format!("s{i}"), p));
        }
        factors.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.render();
        f.write_str(if r.is_empty() { "1" } else { &r })
    }
}

/// An element of the free polynomial ring `Z[L, s1, s2, ...]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniversalMotive {
    terms: BTreeMap<Monomial, BigInt>,
}

impl UniversalMotive {
    pub fn from_monomial(coeff: impl Into<BigInt>, mono: Monomial) -> Self {
        let mut m = Self::default();
        m.add_term(mono, coeff.into());
        m
    }

    /// The Lefschetz motive `L`.
    pub fn lefschetz() -> Self {
        Self::lefschetz_pow(1)
    }

    pub fn lefschetz_pow(a: u32) -> Self {
        Self::from_monomial(1, Monomial::lefschetz_pow(a))
    }

    /// The class `s_n` of the n-th symmetric power of the curve.
    pub fn sym(n: u32) -> Self {
        Self::from_monomial(1, Monomial::sym(n))
    }

    /// The class of the curve, `s_1`.
    pub fn curve() -> Self {
        Self::sym(1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Highest power of `L` occurring; `None` for zero.
    pub fn lefschetz_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.lefschetz).max()
    }

    /// Largest `n` with `s_n` occurring (0 if none).
    pub fn max_sym_index(&self) -> u32 {
        self.terms
            .keys()
            .filter_map(|m| m.sym.last().map(|s| s.0))
            .max()
            .unwrap_or(0)
    }

    /// The coefficient of `L^k`, as a polynomial in the `s_n` alone.
    pub fn lefschetz_coefficient(&self, k: u32) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            if m.lefschetz == k {
                let mono = Monomial { lefschetz: 0, sym: m.sym.clone() };
                out.add_term(mono, c.clone());
            }
        }
        out
    }

    /// Every coefficient is non-negative.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Evaluates the unique ring homomorphism sending `L` to `lefschetz` and
    /// `s_n` to `sym(n)`.
    pub fn evaluate<R: CoefficientRing>(&self, lefschetz: &R, sym: impl Fn(u32) -> R) -> R {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut term = lefschetz.pow(u64::from(m.lefschetz));
            for &(i, p) in &m.sym {
                term = term.mul(&sym(i).pow(u64::from(p)));
            }
            acc.add_assign(&term.mul(&R::from_bigint(c)));
        }
        acc
    }

    fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }
}

impl CoefficientRing for UniversalMotive {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::from_monomial(1, Monomial::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
    fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
    fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(a.mul(b), c * d);
            }
        }
        out
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            let c = self.terms.get(&Monomial::one())?;
            c.unit_inverse().map(|c| Self::from_monomial(c, Monomial::one()))
        } else {
            None
        }
    }
}

impl fmt::Display for UniversalMotive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.display_cmp(b.0));
        let mut out = String::new();
        for (idx, (m, c)) in terms.into_iter().enumerate() {
            write_signed_term(&mut out, idx == 0, c, &m.render());
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for UniversalMotive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for UniversalMotive {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Self::default();
        for (coeff, factors) in parse_sum(s)? {
            let mut mono = Monomial::one();
            for (name, pow) in factors {
                let factor = if name == "L" {
                    Monomial::lefschetz_pow(pow)
                } else if let Some(idx) = name.strip_prefix('s') {
                    let idx: u32 = idx
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad generator '{name}'")))?;
                    if idx == 0 {
                        Monomial::one()
                    } else {
                        Monomial { lefschetz: 0, sym: vec![(idx, pow)] }
                    }
                } else {
                    return Err(Error::Parse(format!("unknown generator '{name}'")));
                };
                if pow > 0 {
                    mono = mono.mul(&factor);
                }
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}
