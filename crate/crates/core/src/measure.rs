//! Motivic measures: ring homomorphisms out of the universal motive ring.
//!
//! Each measure is pinned down by where it sends `L` and the symmetric-power
//! classes `s_n` of a genus `g` curve.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;


use crate::error::{Error, Result};
use crate::motive::UniversalMotive;
use crate::poly::{BivariatePoly, UniPoly};
use crate::ring::CoefficientRing;
use crate::series::{ExponentVector, TruncatedSeries};

/// Hodge–Deligne polynomial of `Sym^n C` for a genus `g` curve: the `q^n`
/// coefficient of `(1-uq)^g (1-vq)^g / ((1-q)(1-uvq))`.
pub fn e_sym_power(n: u32, genus: u32) -> BivariatePoly {
    let mut terms = Vec::new();
    for a in 0..=genus.min(n) {
        for b in 0..=genus.min(n - a) {
            let mut c = binomial(BigInt::from(genus), BigInt::from(a))
                * binomial(BigInt::from(genus), BigInt::from(b));
            if (a + b) % 2 == 1 {
                c = -c;
            }
            // geometric tails of 1/(1-q) and 1/(1-uvq) combine to sum_{k} (uv)^k
            for k in 0..=(n - a - b) {
                terms.push(((a + k, b + k), c.clone()));
            }
        }
    }
    BivariatePoly::from_terms(terms)
}

/// Euler characteristic of `Sym^n C`: the `q^n` coefficient of `(1-q)^(2g-2)`.
pub fn euler_sym_power(n: u32, genus: u32) -> BigInt {
    let m = 2 * i64::from(genus) - 2;
    // (-1)^n * m (m-1) ... (m-n+1) / n!
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..i64::from(n) {
        num *= m - j;
        den *= j + 1;
    }
    let c = num / den;
    if n % 2 == 1 {
        -c
    } else {
        c
    }
}

/// A ring homomorphism out of `Z[L, s1, s2, ...]`.
pub trait MotivicMeasure {
    type Target: CoefficientRing;

    fn lefschetz(&self) -> Self::Target;
    fn sym_power(&self, n: u32) -> Self::Target;

    fn apply(&self, m: &UniversalMotive) -> Self::Target {
        let table = self.sym_table(m.max_sym_index());
        m.evaluate(&self.lefschetz(), |n| table[n as usize].clone())
    }

    /// Applies the measure coefficientwise; the caps are preserved.
    fn lift(&self, s: &TruncatedSeries<UniversalMotive>) -> TruncatedSeries<Self::Target> {
        let top = s.terms().map(|(_, c)| c.max_sym_index()).max().unwrap_or(0);
        let table = self.sym_table(top);
        let l = self.lefschetz();
        s.map_coefficients(|c| c.evaluate(&l, |n| table[n as usize].clone()))
    }

    fn sym_table(&self, top: u32) -> Vec<Self::Target> {
        (0..=top).map(|n| self.sym_power(n)).collect()
    }
}

/// The identity measure.
#[derive(Debug, Clone, Copy, Default)]
pub struct Universal;

impl MotivicMeasure for Universal {
    type Target = UniversalMotive;

    fn lefschetz(&self) -> UniversalMotive {
        UniversalMotive::lefschetz()
    }
    fn sym_power(&self, n: u32) -> UniversalMotive {
        UniversalMotive::sym(n)
    }
    fn apply(&self, m: &UniversalMotive) -> UniversalMotive {
        m.clone()
    }
}

/// `L -> uv`, `s_n -> E(Sym^n C; u, v)`.
#[derive(Debug, Clone, Copy)]
pub struct HodgeDeligne {
    pub genus: u32,
}

impl MotivicMeasure for HodgeDeligne {
    type Target = BivariatePoly;

    fn lefschetz(&self) -> BivariatePoly {
        BivariatePoly::monomial(1, 1, 1)
    }
    fn sym_power(&self, n: u32) -> BivariatePoly {
        e_sym_power(n, self.genus)
    }
}

/// Hodge–Deligne followed by `u = v = t`.
#[derive(Debug, Clone, Copy)]
pub struct SignedPoincare {
    pub genus: u32,
}

impl MotivicMeasure for SignedPoincare {
    type Target = UniPoly;

    fn lefschetz(&self) -> UniPoly {
        UniPoly::monomial(1, 2)
    }
    fn sym_power(&self, n: u32) -> UniPoly {
        e_sym_power(n, self.genus).diagonal()
    }
}

/// Topological Euler characteristic: `L -> 1`, `s_n -> e(Sym^n C)`.
#[derive(Debug, Clone, Copy)]
pub struct Euler {
    pub genus: u32,
}

impl MotivicMeasure for Euler {
    type Target = BigInt;

    fn lefschetz(&self) -> BigInt {
        BigInt::one()
    }
    fn sym_power(&self, n: u32) -> BigInt {
        euler_sym_power(n, self.genus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    Universal,
    HodgeDeligne,
    SignedPoincare,
    Euler,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 4] = [
        MeasureKind::Universal,
        MeasureKind::HodgeDeligne,
        MeasureKind::SignedPoincare,
        MeasureKind::Euler,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MeasureKind::Universal => "universal",
            MeasureKind::HodgeDeligne => "hodge-deligne",
            MeasureKind::SignedPoincare => "signed-poincare",
            MeasureKind::Euler => "euler",
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        MeasureKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::Parameter(format!("unknown measure '{s}'")))
    }
}

/// A measure together with the genus of the curve it specializes to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MeasureSpec {
    pub kind: MeasureKind,
    pub genus: u32,
}

impl MeasureSpec {
    pub fn new(kind: MeasureKind, genus: u32) -> Self {
        Self { kind, genus }
    }
}

/// The value of a measure, in whichever target ring it lands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MeasureValue {
    Universal(UniversalMotive),
    Bivariate(BivariatePoly),
    Univariate(UniPoly),
    Integer(BigInt),
}

impl fmt::Display for MeasureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureValue::Universal(m) => m.fmt(f),
            MeasureValue::Bivariate(p) => p.fmt(f),
            MeasureValue::Univariate(p) => p.fmt(f),
            MeasureValue::Integer(n) => n.fmt(f),
        }
    }
}

pub fn apply_measure(m: &UniversalMotive, spec: MeasureSpec) -> MeasureValue {
    let g = spec.genus;
    match spec.kind {
        MeasureKind::Universal => MeasureValue::Universal(m.clone()),
        MeasureKind::HodgeDeligne => MeasureValue::Bivariate(HodgeDeligne { genus: g }.apply(m)),
        MeasureKind::SignedPoincare => {
            MeasureValue::Univariate(SignedPoincare { genus: g }.apply(m))
        }
        MeasureKind::Euler => MeasureValue::Integer(Euler { genus: g }.apply(m)),
    }
}

/// A series after a measure has been applied coefficientwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MeasuredSeries {
    Universal(TruncatedSeries<UniversalMotive>),
    Bivariate(TruncatedSeries<BivariatePoly>),
    Univariate(TruncatedSeries<UniPoly>),
    Integer(TruncatedSeries<BigInt>),
}

impl MeasuredSeries {
    /// Canonical string of the coefficient at `e` (which must be within cap).
    pub fn coefficient_string(&self, e: &ExponentVector) -> Result<String> {
        Ok(match self {
            MeasuredSeries::Universal(s) => s.coefficient(e)?.to_string(),
            MeasuredSeries::Bivariate(s) => s.coefficient(e)?.to_string(),
            MeasuredSeries::Univariate(s) => s.coefficient(e)?.to_string(),
            MeasuredSeries::Integer(s) => s.coefficient(e)?.to_string(),
        })
    }
}

pub fn lift_measure_to_series(
    s: &TruncatedSeries<UniversalMotive>,
    spec: MeasureSpec,
) -> MeasuredSeries {
    let g = spec.genus;
    match spec.kind {
        MeasureKind::Universal => MeasuredSeries::Universal(s.clone()),
        MeasureKind::HodgeDeligne => MeasuredSeries::Bivariate(HodgeDeligne { genus: g }.lift(s)),
        MeasureKind::SignedPoincare => {
            MeasuredSeries::Univariate(SignedPoincare { genus: g }.lift(s))
        }
        MeasureKind::Euler => MeasuredSeries::Integer(Euler { genus: g }.lift(s)),
    }
}

/// Checks that a Hodge–Deligne polynomial looks like that of a smooth
/// projective connected variety of dimension `dim`: total degree `2*dim`,
/// `(uv)^dim` coefficient 1, symmetric in `u <-> v`.
pub fn has_smooth_connected_shape(p: &BivariatePoly, dim: u32) -> bool {
    p.total_degree() == Some(2 * dim)
        && p.coeff(dim, dim).is_one()
        && p.terms()
            .all(|(&(i, j), _)| i + j < 2 * dim || (i == dim && j == dim))
        && p.swap_uv() == *p
}
