//! The motivic exponential on a restricted class grammar, and the power
//! structure on `Z[u,v]`.
//!
//! Arguments are finite sums of `mult * [Y] * L^a * q^m` with `Y` either a
//! point or the curve `C`. On these, `sigma^n` is known in closed form:
//! `Sym^n(A^a) = L^{an}` and `Sym^n(C x A^a) = s_n * L^{an}`. General classes
//! would need a full lambda-ring structure, which the free ring does not carry.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::motive::{Monomial, UniversalMotive};
use crate::poly::BivariatePoly;
use crate::ring::CoefficientRing;
use crate::series::{CapVector, ExponentVector, TruncatedSeries};
use crate::zeta::QuotSeriesConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// `L^a`, the class of an affine space.
    LefschetzPower,
    /// `[C] * L^a`.
    CurveTimesLefschetz,
}

/// One summand `mult * class * q^mono` of an exponential argument.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpTerm {
    pub kind: ClassKind,
    pub lefschetz: u32,
    pub mult: i64,
    pub mono: ExponentVector,
}

impl ExpTerm {
    pub fn new(kind: ClassKind, lefschetz: u32, mult: i64, mono: ExponentVector) -> Result<Self> {
        if mono.is_zero() {
            return Err(Error::Augmentation);
        }
        Ok(Self { kind, lefschetz, mult, mono })
    }

    pub fn point(mult: i64, mono: ExponentVector) -> Result<Self> {
        Self::new(ClassKind::LefschetzPower, 0, mult, mono)
    }

    pub fn curve(lefschetz: u32, mono: ExponentVector) -> Result<Self> {
        Self::new(ClassKind::CurveTimesLefschetz, lefschetz, 1, mono)
    }
}

/// A finite formal sum of [`ExpTerm`]s sharing one ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExpArgument {
    terms: Vec<ExpTerm>,
}

impl ExpArgument {
    pub fn new(terms: Vec<ExpTerm>) -> Result<Self> {
        if let Some(first) = terms.first() {
            let d = first.mono.dim();
            if let Some(bad) = terms.iter().find(|t| t.mono.dim() != d) {
                return Err(Error::DimensionMismatch { expected: d, found: bad.mono.dim() });
            }
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    /// Formal sum of two arguments.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::new(terms)
    }

    /// `[C] * sum_{alpha=1..r} L^{alpha-1} * sum_{i=1..d} q_i ... q_d`, i.e.
    /// `[C x P^{r-1}]` times the suffix monomials.
    pub fn curve_times_projective_space(rank: u32, depth: usize) -> Result<Self> {
        let mut terms = Vec::new();
        for alpha in 1..=rank {
            for i in 1..=depth {
                terms.push(ExpTerm::curve(alpha - 1, ExponentVector::suffix(depth, i))?);
            }
        }
        Self::new(terms)
    }
}

/// `sigma^n` of a multiplicity-one term, as a coefficient and an exponent.
pub fn sigma_n(term: &ExpTerm, n: u32) -> (UniversalMotive, ExponentVector) {
    let lef = Monomial::lefschetz_pow(term.lefschetz * n);
    let class = match term.kind {
        ClassKind::LefschetzPower => lef,
        ClassKind::CurveTimesLefschetz => lef.mul(&Monomial::sym(n)),
    };
    (UniversalMotive::from_monomial(1, class), term.mono.scaled(n))
}

/// `Exp_+(arg)`, truncated at `cap`.
pub fn exp_plus(arg: &ExpArgument, cap: &CapVector) -> Result<TruncatedSeries<UniversalMotive>> {
    let mut acc = TruncatedSeries::one(cap.clone());
    for term in &arg.terms {
        if term.mono.dim() != cap.dim() {
            return Err(Error::DimensionMismatch { expected: cap.dim(), found: term.mono.dim() });
        }
        if term.mono.is_zero() {
            return Err(Error::Augmentation);
        }
        let top = crate::series::max_substitution_degree(&term.mono, cap);
        let factor = TruncatedSeries::from_terms(cap.clone(), (0..=top).map(|n| {
            let (c, e) = sigma_n(term, n);
            (e, c)
        }))?;
        acc = acc.mul(&factor.pow(term.mult)?)?;
    }
    Ok(acc)
}

/// `Exp_+([C x P^{r-1}] * sum_i q_i ... q_d)` at the config's cap.
pub fn exp_reformulation(cfg: &QuotSeriesConfig) -> Result<TruncatedSeries<UniversalMotive>> {
    let arg = ExpArgument::curve_times_projective_space(cfg.rank(), cfg.depth())?;
    exp_plus(&arg, cfg.cap())
}

/// `(1 - q)^{-f(u,v)} = prod_{i,j} (1 - u^i v^j q)^{-p_ij}` up to `q^cap`.
pub fn power_structure_pow(f: &BivariatePoly, cap: u32) -> TruncatedSeries<BivariatePoly> {
    let cap_vec = CapVector::uniform(1, cap).expect("one variable");
    let mut acc = TruncatedSeries::one(cap_vec.clone());
    for (&(i, j), p) in f.terms() {
        let x = BivariatePoly::monomial(1, i, j);
        // 1/(1 - xq) = sum_k x^k q^k
        let geometric = TruncatedSeries::from_terms(
            cap_vec.clone(),
            (0..=cap).map(|k| (ExponentVector::new(vec![k]), x.pow(u64::from(k)))),
        )
        .expect("one variable");
        let p = i64::try_from(p).expect("power-structure exponent fits in i64");
        acc = acc
            .mul(&geometric.pow(p).expect("geometric series is invertible"))
            .expect("caps agree");
    }
    acc
}

/// Coefficient table of a univariate series, for quick comparisons.
pub fn univariate_coefficients<R: CoefficientRing>(s: &TruncatedSeries<R>) -> BTreeMap<u32, R> {
    s.terms()
        .map(|(e, c)| (e.as_slice()[0], c.clone()))
        .collect()
}
