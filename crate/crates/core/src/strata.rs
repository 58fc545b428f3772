//! Direct summation over the Białynicki-Birula strata of the nested Quot
//! scheme of the trivial bundle.
//!
//! The torus-fixed components of `Quot_C(O^r, n)` are indexed by decompositions
//! `n = n_1 + ... + n_r` into nested tuples; component `n_alpha` is a nested
//! Hilbert scheme, a product of symmetric powers of `C` indexed by the
//! difference tuple. The stratum over it is an affine bundle of rank
//! `sum_alpha (alpha - 1) * n_{alpha,d}`.
//!
//! Nothing here goes through series multiplication, so it serves as an
//! independent check on the product formula in [`crate::zeta`].

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::motive::{Monomial, UniversalMotive};
use crate::ring::CoefficientRing;
use crate::series::{ExponentVector, TruncatedSeries};
use crate::zeta::QuotSeriesConfig;

/// A tuple `0 <= n_1 <= ... <= n_d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NestedTuple(Vec<u32>);

impl NestedTuple {
    pub fn new(n: impl Into<Vec<u32>>) -> Result<Self> {
        let n = n.into();
        if n.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if !n.windows(2).all(|w| w[0] <= w[1]) {
            return Err(Error::Parameter(format!("{n:?} is not non-decreasing")));
        }
        Ok(Self(n))
    }

    pub fn zero(d: usize) -> Self {
        Self(vec![0; d])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// `n_d`, the length of the largest quotient.
    pub fn top(&self) -> u32 {
        *self.0.last().expect("non-empty")
    }

    pub fn to_diffs(&self) -> DiffTuple {
        let mut prev = 0;
        DiffTuple(
            self.0
                .iter()
                .map(|&x| {
                    let l = x - prev;
                    prev = x;
                    l
                })
                .collect(),
        )
    }

    pub fn from_diffs(l: &DiffTuple) -> Self {
        Self(
            l.0.iter()
                .scan(0, |acc, &x| {
                    *acc += x;
                    Some(*acc)
                })
                .collect(),
        )
    }

    pub fn exponent(&self) -> ExponentVector {
        ExponentVector::new(self.0.clone())
    }
}

impl fmt::Debug for NestedTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.exponent(), f)
    }
}

impl TryFrom<&ExponentVector> for NestedTuple {
    type Error = Error;

    fn try_from(e: &ExponentVector) -> Result<Self> {
        Self::new(e.as_slice().to_vec())
    }
}

/// Consecutive differences `(n_1, n_2 - n_1, ..., n_d - n_{d-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffTuple(Vec<u32>);

impl DiffTuple {
    pub fn new(l: impl Into<Vec<u32>>) -> Self {
        Self(l.into())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// `r` nested tuples summing componentwise to a target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition {
    parts: Vec<NestedTuple>,
}

impl Decomposition {
    pub fn new(parts: Vec<NestedTuple>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Parameter("a decomposition needs at least one part".into()));
        }
        let d = parts[0].dim();
        if let Some(bad) = parts.iter().find(|p| p.dim() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: bad.dim() });
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[NestedTuple] {
        &self.parts
    }

    pub fn total(&self) -> Vec<u32> {
        let d = self.parts[0].dim();
        (0..d)
            .map(|i| self.parts.iter().map(|p| p.0[i]).sum())
            .collect()
    }

    /// Rank of the affine bundle over this fixed component.
    pub fn fibre_dimension(&self) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .map(|(alpha, p)| alpha as u32 * p.top())
            .sum()
    }
}

/// All nested tuples of length `d` with `n_d <= bound`, in graded-lex order.
pub fn enumerate_nested(d: usize, bound: u32) -> impl Iterator<Item = NestedTuple> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                let start = prefix.last().copied().unwrap_or(0);
                (start..=bound).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    let mut out: Vec<ExponentVector> = out.into_iter().map(ExponentVector::new).collect();
    out.sort();
    out.into_iter().map(|e| NestedTuple(e.as_slice().to_vec()))
}

/// Weak compositions of `n` into `k` ordered non-negative parts.
pub fn weak_compositions(n: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if k == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            weak_compositions(n - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// All decompositions of `n` into `r` nested parts.
///
/// Generated directly on difference tuples: each difference `l_i` of the
/// target is split into `r` non-negative pieces, so every part is nested and
/// the parts sum to `n` by construction.
pub fn enumerate_decompositions(
    n: &NestedTuple,
    r: u32,
) -> impl Iterator<Item = Decomposition> {
    let r = r.max(1) as usize;
    let d = n.dim();
    n.to_diffs()
        .0
        .into_iter()
        .map(|l| weak_compositions(l, r))
        .multi_cartesian_product()
        .map(move |columns| {
            // columns[i][alpha] is the i-th difference of part alpha
            let parts = (0..r)
                .map(|alpha| {
                    NestedTuple::from_diffs(&DiffTuple((0..d).map(|i| columns[i][alpha]).collect()))
                })
                .collect();
            Decomposition { parts }
        })
}

/// Class of the nested Hilbert scheme `Hilb^n(C) = prod_i Sym^{l_i} C`.
pub fn hilb_class(n: &NestedTuple) -> UniversalMotive {
    UniversalMotive::from_monomial(1, hilb_monomial(n))
}

fn hilb_monomial(n: &NestedTuple) -> Monomial {
    n.to_diffs()
        .0
        .iter()
        .fold(Monomial::one(), |acc, &l| acc.mul(&Monomial::sym(l)))
}

/// `L^{fibre dimension} * prod_alpha [Hilb^{n_alpha}(C)]`.
pub fn stratum_class(dec: &Decomposition) -> UniversalMotive {
    let mono = dec
        .parts
        .iter()
        .fold(Monomial::lefschetz_pow(dec.fibre_dimension()), |acc, p| {
            acc.mul(&hilb_monomial(p))
        });
    UniversalMotive::from_monomial(1, mono)
}

/// Sum of the stratum classes over all decompositions of `n` into `r` parts.
pub fn strata_sum(n: &NestedTuple, r: u32) -> UniversalMotive {
    let mut acc = UniversalMotive::zero();
    for dec in enumerate_decompositions(n, r) {
        acc.add_assign(&stratum_class(&dec));
    }
    acc
}

/// The generating function assembled coefficient by coefficient from strata.
pub fn oracle_series(cfg: &QuotSeriesConfig) -> Result<TruncatedSeries<UniversalMotive>> {
    let cap = cfg.cap();
    let bound = *cap.as_slice().last().expect("non-empty cap");
    let tuples: Vec<NestedTuple> = enumerate_nested(cfg.depth(), bound)
        .filter(|n| n.exponent().within(cap))
        .collect();
    let coefficients: Vec<(ExponentVector, UniversalMotive)> = tuples
        .par_iter()
        .map(|n| (n.exponent(), strata_sum(n, cfg.rank())))
        .collect();
    TruncatedSeries::from_terms(cap.clone(), coefficients)
}

/// Euler characteristic of `Quot_{P^1}(O^r, n)` by pure counting: each
/// fixed component is a product of `Sym^l P^1 = P^l`, contributing `l + 1`,
/// and affine fibres contribute 1.
pub fn euler_count(rank: u32, n: &NestedTuple) -> BigInt {
    enumerate_decompositions(n, rank)
        .map(|dec| {
            dec.parts
                .iter()
                .flat_map(|p| p.to_diffs().0)
                .map(|l| BigInt::from(l + 1))
                .product::<BigInt>()
        })
        .sum()
}

/// Number of torus-fixed components of `Quot_C(O^r, n)`.
pub fn fixed_component_count(rank: u32, n: &NestedTuple) -> usize {
    enumerate_decompositions(n, rank).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nt(v: &[u32]) -> NestedTuple {
        NestedTuple::new(v.to_vec()).unwrap()
    }

    fn m(s: &str) -> UniversalMotive {
        s.parse().unwrap()
    }

    /// Reference enumerator: every r-tuple of column compositions, filtered
    /// for nestedness of each part.
    fn brute_force_decompositions(n: &NestedTuple, r: usize) -> Vec<Decomposition> {
        let columns: Vec<Vec<Vec<u32>>> = n
            .as_slice()
            .iter()
            .map(|&x| weak_compositions(x, r))
            .collect();
        let mut out: Vec<Decomposition> = columns
            .into_iter()
            .multi_cartesian_product()
            .filter_map(|cols| {
                let parts: Option<Vec<NestedTuple>> = (0..r)
                    .map(|a| NestedTuple::new(cols.iter().map(|c| c[a]).collect::<Vec<_>>()).ok())
                    .collect();
                parts.map(|parts| Decomposition { parts })
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn diffs_examples() {
        assert_eq!(nt(&[1, 1, 3]).to_diffs(), DiffTuple::new(vec![1, 0, 2]));
        assert_eq!(nt(&[0, 0, 0]).to_diffs(), DiffTuple::new(vec![0, 0, 0]));
        for n in enumerate_nested(3, 4) {
            assert_eq!(NestedTuple::from_diffs(&n.to_diffs()), n);
        }
        assert!(NestedTuple::new(vec![2, 1]).is_err());
    }

    #[test]
    fn enumerate_nested_examples() {
        let v: Vec<_> = enumerate_nested(1, 2).collect();
        assert_eq!(v, vec![nt(&[0]), nt(&[1]), nt(&[2])]);
        let v: Vec<_> = enumerate_nested(2, 1).collect();
        assert_eq!(v, vec![nt(&[0, 0]), nt(&[0, 1]), nt(&[1, 1])]);
        assert_eq!(enumerate_nested(2, 2).count(), 6);
        // stars and bars: C(bound + d, d)
        assert_eq!(enumerate_nested(3, 4).count(), 35);
    }

    #[test]
    fn decomposition_examples() {
        let v: Vec<_> = enumerate_decompositions(&nt(&[1]), 2).collect();
        assert_eq!(v.len(), 2);
        assert!(v.contains(&Decomposition::new(vec![nt(&[1]), nt(&[0])]).unwrap()));
        assert!(v.contains(&Decomposition::new(vec![nt(&[0]), nt(&[1])]).unwrap()));

        for r in 1..4 {
            let v: Vec<_> = enumerate_decompositions(&NestedTuple::zero(3), r).collect();
            assert_eq!(v.len(), 1);
            assert!(v[0].parts().iter().all(|p| p.top() == 0));
        }

        // (0,1) + (1,0) is excluded: (1,0) is not nested
        let mut v: Vec<_> = enumerate_decompositions(&nt(&[1, 1]), 2).collect();
        v.sort();
        assert_eq!(v, brute_force_decompositions(&nt(&[1, 1]), 2));
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn decompositions_match_reference_enumerator() {
        for d in 1..=3 {
            for n in enumerate_nested(d, 3) {
                for r in 1..=3 {
                    let mut fast: Vec<_> = enumerate_decompositions(&n, r).collect();
                    fast.sort();
                    let slow = brute_force_decompositions(&n, r as usize);
                    assert_eq!(fast, slow, "n={n:?} r={r}");
                    assert!(fast.iter().all(|dec| dec.total() == n.as_slice()));
                }
            }
        }
    }

    #[test]
    fn hilb_class_examples() {
        assert_eq!(hilb_class(&nt(&[1, 2])), m("s1^2"));
        assert_eq!(hilb_class(&nt(&[0, 0, 0])), UniversalMotive::one());
        assert_eq!(hilb_class(&nt(&[2, 2])), m("s2"));
    }

    #[test]
    fn stratum_class_examples() {
        let dec = Decomposition::new(vec![nt(&[1]), nt(&[0])]).unwrap();
        assert_eq!(stratum_class(&dec), m("s1"));
        let dec = Decomposition::new(vec![nt(&[0]), nt(&[1])]).unwrap();
        assert_eq!(stratum_class(&dec), m("L*s1"));
        let dec = Decomposition::new(vec![nt(&[0, 0]); 3]).unwrap();
        assert_eq!(stratum_class(&dec), UniversalMotive::one());
    }

    #[test]
    fn oracle_examples() {
        let cfg = QuotSeriesConfig::uniform(1, 3, 3).unwrap();
        let s = oracle_series(&cfg).unwrap();
        for n in enumerate_nested(3, 3) {
            assert_eq!(s.coefficient(&n.exponent()).unwrap(), hilb_class(&n));
        }
        let cfg = QuotSeriesConfig::uniform(2, 1, 2).unwrap();
        let s = oracle_series(&cfg).unwrap();
        assert_eq!(s.coefficient(&ExponentVector::new(vec![1])).unwrap(), m("s1 + L*s1"));
        assert_eq!(
            s.coefficient(&ExponentVector::new(vec![2])).unwrap(),
            m("s2 + L*s1^2 + L^2*s2")
        );
    }

    #[test]
    fn euler_count_examples() {
        for k in 0..6 {
            assert_eq!(euler_count(1, &nt(&[k])), BigInt::from(k + 1));
        }
        assert_eq!(euler_count(2, &nt(&[2])), BigInt::from(10));
        assert_eq!(euler_count(3, &NestedTuple::zero(2)), BigInt::from(1));
    }

    #[test]
    fn fixed_components_count_is_product_of_multichoose() {
        // prod_i C(l_i + r - 1, r - 1)
        let n = nt(&[1, 3, 3, 5]);
        assert_eq!(fixed_component_count(3, &n), 3 * 6 * 6);
    }
}
