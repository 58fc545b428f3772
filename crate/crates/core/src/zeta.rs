//! The Kapranov zeta function of a curve and the product formula for the
//! generating function of nested Quot schemes.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::motive::UniversalMotive;
use crate::ring::CoefficientRing;
use crate::series::{max_substitution_degree, CapVector, ExponentVector, TruncatedSeries};

/// Rank `r`, nesting depth `d` and the truncation cap of a generating function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotSeriesConfig {
    rank: u32,
    depth: usize,
    cap: CapVector,
}

impl QuotSeriesConfig {
    pub fn new(rank: u32, depth: usize, cap: CapVector) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Parameter("rank must be at least 1".into()));
        }
        if depth == 0 {
            return Err(Error::ZeroDimension);
        }
        if cap.dim() != depth {
            return Err(Error::DimensionMismatch { expected: depth, found: cap.dim() });
        }
        Ok(Self { rank, depth, cap })
    }

    /// The same bound on every variable.
    pub fn uniform(rank: u32, depth: usize, cap: u32) -> Result<Self> {
        if depth == 0 {
            return Err(Error::ZeroDimension);
        }
        Self::new(rank, depth, CapVector::uniform(depth, cap)?)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn cap(&self) -> &CapVector {
        &self.cap
    }
}

/// `1 + sum_{1 <= n <= cap} s_n q^n`.
pub fn kapranov_zeta(cap: u32) -> TruncatedSeries<UniversalMotive> {
    let cap_vec = CapVector::uniform(1, cap).expect("one variable");
    TruncatedSeries::from_terms(
        cap_vec,
        (0..=cap).map(|n| (ExponentVector::new(vec![n]), UniversalMotive::sym(n))),
    )
    .expect("dimensions agree")
}

/// `zeta_C(L^(alpha-1) * q_i q_{i+1} ... q_d)` truncated at the config cap.
/// `alpha` and `i` are 1-based.
pub fn shifted_zeta(
    alpha: u32,
    i: usize,
    cfg: &QuotSeriesConfig,
) -> Result<TruncatedSeries<UniversalMotive>> {
    if alpha == 0 || alpha > cfg.rank {
        return Err(Error::Parameter(format!(
            "alpha = {alpha} outside 1..={}",
            cfg.rank
        )));
    }
    if i == 0 || i > cfg.depth {
        return Err(Error::Parameter(format!("i = {i} outside 1..={}", cfg.depth)));
    }
    let target = ExponentVector::suffix(cfg.depth, i);
    let source = kapranov_zeta(max_substitution_degree(&target, &cfg.cap));
    let scale = UniversalMotive::lefschetz_pow(alpha - 1);
    TruncatedSeries::substitute(&source, &scale, &target, cfg.cap.clone())
}

/// All `r * d` shifted zeta factors, alpha-major.
pub fn shifted_factors(cfg: &QuotSeriesConfig) -> Result<Vec<TruncatedSeries<UniversalMotive>>> {
    (1..=cfg.rank)
        .flat_map(|alpha| (1..=cfg.depth).map(move |i| (alpha, i)))
        .map(|(alpha, i)| shifted_zeta(alpha, i, cfg))
        .collect()
}

/// The generating function `Z_{C,r,d}` as the product over `alpha = 1..r` and
/// `i = 1..d` of the shifted zeta functions.
pub fn main_series(cfg: &QuotSeriesConfig) -> Result<TruncatedSeries<UniversalMotive>> {
    let factors = shifted_factors(cfg)?;
    TruncatedSeries::product_of(cfg.cap.clone(), &factors)
}

/// Same product as [`main_series`], reduced as a balanced tree in parallel.
pub fn main_series_parallel(cfg: &QuotSeriesConfig) -> Result<TruncatedSeries<UniversalMotive>> {
    let factors = shifted_factors(cfg)?;
    let one = TruncatedSeries::one(cfg.cap.clone());
    factors
        .into_par_iter()
        .map(Ok)
        .try_reduce(|| one.clone(), |a, b| a.mul(&b))
}

/// The motive of `Quot_C(E, n)`: the `q^n` coefficient of [`main_series`].
pub fn nested_coefficient(cfg: &QuotSeriesConfig, n: &[u32]) -> Result<UniversalMotive> {
    main_series(cfg)?.coefficient(&ExponentVector::new(n.to_vec()))
}

/// Restricts a series to the exponents `(0, ..., 0, k)` and returns it as a
/// univariate series in `q_d`.
pub fn last_variable_slice<R: CoefficientRing>(
    s: &TruncatedSeries<R>,
) -> Result<TruncatedSeries<R>> {
    let d = s.dim();
    let top = s.cap().as_slice()[d - 1];
    let cap = CapVector::uniform(1, top)?;
    TruncatedSeries::from_terms(
        cap,
        s.terms()
            .filter(|(e, _)| e.as_slice()[..d - 1].iter().all(|&x| x == 0))
            .map(|(e, c)| (ExponentVector::new(vec![e.as_slice()[d - 1]]), c.clone())),
    )
}

/// `prod_alpha zeta_C(L^(alpha-1) q)`: the depth-one generating function.
pub fn depth_one_series(rank: u32, cap: u32) -> Result<TruncatedSeries<UniversalMotive>> {
    main_series(&QuotSeriesConfig::uniform(rank, 1, cap)?)
}
