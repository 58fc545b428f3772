//! Truncated multivariate formal power series over an exact coefficient ring.
//!
//! A series lives in `R[[q1, ..., qd]]` modulo the monomial ideal of exponents
//! exceeding a per-variable cap: `q^e` is kept iff `e_i <= cap_i` for every `i`.
//! Because that ideal is closed under multiplication by any monomial, all
//! operations here are exact in the quotient ring.
//!
//! Terms are stored sparsely, keyed by exponent vector in graded-lex order, with
//! no zero coefficients and no out-of-cap exponents.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::CoefficientRing;

/// Exponent vector of a monomial `q1^e1 * ... * qd^ed`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: impl Into<Vec<u32>>) -> Self {
        Self(exps.into())
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    /// `q_i * q_{i+1} * ... * q_d` for 1-based `i`.
    pub fn suffix(dim: usize, i: usize) -> Self {
        Self((1..=dim).map(|j| u32::from(j >= i)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Entries are weakly increasing.
    pub fn is_nondecreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn within(&self, cap: &CapVector) -> bool {
        self.0.len() == cap.0.len() && self.0.iter().zip(&cap.0).all(|(e, c)| e <= c)
    }

    pub fn scaled(&self, k: u32) -> Self {
        Self(self.0.iter().map(|&e| e * k).collect())
    }

    fn plus(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn checked_minus(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

/// Per-variable truncation bounds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CapVector(Vec<u32>);

impl CapVector {
    pub fn new(caps: impl Into<Vec<u32>>) -> Result<Self> {
        let caps = caps.into();
        if caps.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self(caps))
    }

    pub fn uniform(dim: usize, cap: u32) -> Result<Self> {
        Self::new(vec![cap; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Componentwise `self <= other`.
    pub fn fits_in(&self, other: &CapVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All exponent vectors within the cap, in graded-lex order.
    pub fn box_exponents(&self) -> Vec<ExponentVector> {
        let mut out = vec![Vec::with_capacity(self.0.len())];
        for &c in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=c).map(move |e| {
                        let mut v = prefix.clone();
                        v.push(e);
                        v
                    })
                })
                .collect();
        }
        let mut out: Vec<_> = out.into_iter().map(ExponentVector).collect();
        out.sort();
        out
    }
}

/// A truncated power series in `cap.dim()` variables.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<R> {
    cap: CapVector,
    terms: BTreeMap<ExponentVector, R>,
}

impl<R: CoefficientRing> TruncatedSeries<R> {
    pub fn zero(cap: CapVector) -> Self {
        Self { cap, terms: BTreeMap::new() }
    }

    pub fn one(cap: CapVector) -> Self {
        Self::constant(R::one(), cap)
    }

    pub fn constant(c: R, cap: CapVector) -> Self {
        let dim = cap.dim();
        let mut s = Self::zero(cap);
        s.insert(ExponentVector::zero(dim), c);
        s
    }

    /// The single term `coeff * q^e`, or zero when `e` exceeds the cap.
    pub fn monomial(coeff: R, e: ExponentVector, cap: CapVector) -> Result<Self> {
        check_dim(cap.dim(), e.dim())?;
        let mut s = Self::zero(cap);
        if e.within(&s.cap) {
            s.insert(e, coeff);
        }
        Ok(s)
    }

    /// Builds a series from terms, summing duplicates and dropping out-of-cap
    /// exponents.
    pub fn from_terms(
        cap: CapVector,
        terms: impl IntoIterator<Item = (ExponentVector, R)>,
    ) -> Result<Self> {
        let mut s = Self::zero(cap);
        for (e, c) in terms {
            check_dim(s.dim(), e.dim())?;
            if e.within(&s.cap) {
                s.accumulate(e, &c);
            }
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.cap.dim()
    }

    pub fn cap(&self) -> &CapVector {
        &self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^e`; errors when `e` lies outside the cap, since that
    /// coefficient is unknown rather than zero.
    pub fn coefficient(&self, e: &ExponentVector) -> Result<R> {
        check_dim(self.dim(), e.dim())?;
        if !e.within(&self.cap) {
            return Err(Error::OutOfCap {
                exponent: e.0.clone(),
                cap: self.cap.0.clone(),
            });
        }
        Ok(self.terms.get(e).cloned().unwrap_or_else(R::zero))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            cap: self.cap.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(self.cap.clone());
        for (e, x) in &self.terms {
            out.insert(e.clone(), x.mul(c));
        }
        out
    }

    /// Cauchy product, discarding exponents beyond the cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut acc: BTreeMap<ExponentVector, R> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.plus(eb);
                if !e.within(&self.cap) {
                    continue;
                }
                let prod = ca.mul(cb);
                match acc.get_mut(&e) {
                    Some(slot) => slot.add_assign(&prod),
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { cap: self.cap.clone(), terms: acc })
    }

    /// Multiplicative inverse, by recursion on total degree.
    pub fn invert(&self) -> Result<Self> {
        let zero = ExponentVector::zero(self.dim());
        let inv0 = self
            .terms
            .get(&zero)
            .and_then(R::unit_inverse)
            .ok_or(Error::NotInvertible)?;
        let neg_inv0 = inv0.neg();
        let mut out = Self::zero(self.cap.clone());
        out.insert(zero, inv0);
        for e in self.cap.box_exponents().into_iter().skip(1) {
            let mut sum = R::zero();
            for (f, a) in self.terms.iter().skip(1) {
                if f.total_degree() > e.total_degree() {
                    break;
                }
                if let Some(rest) = e.checked_minus(f) {
                    if let Some(b) = out.terms.get(&rest) {
                        sum.add_assign(&a.mul(b));
                    }
                }
            }
            out.insert(e, sum.mul(&neg_inv0));
        }
        Ok(out)
    }

    /// Integer power; negative exponents go through [`Self::invert`].
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.invert()? } else { self.clone() };
        let mut exp = n.unsigned_abs();
        let mut acc = Self::one(self.cap.clone());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Substitutes `q -> scale * q^target` into a univariate series.
    ///
    /// The source must be known up to every degree `k` with `k * target` inside
    /// `cap`; otherwise terms would be lost silently and an error is returned.
    pub fn substitute(
        src: &Self,
        scale: &R,
        target: &ExponentVector,
        cap: CapVector,
    ) -> Result<Self> {
        if src.dim() != 1 {
            return Err(Error::NotUnivariate(src.dim()));
        }
        check_dim(cap.dim(), target.dim())?;
        if target.is_zero() {
            return Err(Error::ZeroSubstitution);
        }
        let needed = max_substitution_degree(target, &cap);
        let available = src.cap.0[0];
        if available < needed {
            return Err(Error::SourceCapTooSmall { available, needed });
        }
        let mut out = Self::zero(cap);
        let mut scale_pow = R::one();
        let mut k_prev = 0u32;
        for (e, c) in &src.terms {
            let k = e.0[0];
            if k > needed {
                break;
            }
            scale_pow = scale_pow.mul(&scale.pow(u64::from(k - k_prev)));
            k_prev = k;
            out.insert(target.scaled(k), c.mul(&scale_pow));
        }
        Ok(out)
    }

    /// Product of all factors; the empty product is `1` at `cap`.
    pub fn product_of<'a>(cap: CapVector, factors: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        factors
            .into_iter()
            .try_fold(Self::one(cap), |acc, f| acc.mul(f))
    }

    /// Re-truncates to a smaller cap.
    pub fn truncate(&self, cap: &CapVector) -> Result<Self> {
        if !cap.fits_in(&self.cap) {
            return Err(Error::CapMismatch {
                left: self.cap.0.clone(),
                right: cap.0.clone(),
            });
        }
        Ok(Self {
            cap: cap.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.within(cap))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    /// Applies a ring map to every coefficient.
    pub fn map_coefficients<S: CoefficientRing>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        let mut out = TruncatedSeries::zero(self.cap.clone());
        for (e, c) in &self.terms {
            out.insert(e.clone(), f(c));
        }
        out
    }

    /// No zero coefficients and no exponent outside the cap.
    pub fn is_canonical(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| !c.is_zero() && e.within(&self.cap))
    }

    /// First exponent (in graded-lex order) where two series disagree.
    pub fn first_difference(&self, other: &Self) -> Option<(ExponentVector, R, R)> {
        let mut keys: Vec<&ExponentVector> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|e| {
            let a = self.terms.get(e).cloned().unwrap_or_else(R::zero);
            let b = other.terms.get(e).cloned().unwrap_or_else(R::zero);
            (a != b).then(|| (e.clone(), a, b))
        })
    }

    fn insert(&mut self, e: ExponentVector, c: R) {
        if !c.is_zero() {
            self.terms.insert(e, c);
        }
    }

    fn accumulate(&mut self, e: ExponentVector, c: &R) {
        match self.terms.get_mut(&e) {
            Some(slot) => {
                slot.add_assign(c);
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => self.insert(e, c.clone()),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        check_dim(self.dim(), other.dim())?;
        if self.cap != other.cap {
            return Err(Error::CapMismatch {
                left: self.cap.0.clone(),
                right: other.cap.0.clone(),
            });
        }
        Ok(())
    }
}

/// Largest `k` such that `k * target` still fits in `cap`.
pub fn max_substitution_degree(target: &ExponentVector, cap: &CapVector) -> u32 {
    target
        .0
        .iter()
        .zip(&cap.0)
        .filter(|(t, _)| **t > 0)
        .map(|(t, c)| c / t)
        .min()
        .unwrap_or(0)
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

impl<R: CoefficientRing> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let vars: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("q{}", i + 1)
                    } else {
                        format!("q{}^{k}", i + 1)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<R: CoefficientRing> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[cap {:?}] {self}", self.cap.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motive::UniversalMotive;
    use num_bigint::BigInt;

    type S = TruncatedSeries<BigInt>;

    fn cap(v: &[u32]) -> CapVector {
        CapVector::new(v.to_vec()).unwrap()
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn uni(coeffs: &[i64], c: u32) -> S {
        S::from_terms(
            cap(&[c]),
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &x)| (ev(&[k as u32]), BigInt::from(x))),
        )
        .unwrap()
    }

    #[test]
    fn zero_dimension_rejected() {
        assert_eq!(CapVector::new(vec![]), Err(Error::ZeroDimension));
    }

    #[test]
    fn monomial_cases() {
        let one = S::monomial(BigInt::from(1), ev(&[0, 0]), cap(&[3, 3])).unwrap();
        assert_eq!(one, S::one(cap(&[3, 3])));
        let gone = S::monomial(BigInt::from(5), ev(&[4, 0]), cap(&[3, 3])).unwrap();
        assert!(gone.is_zero());
        let s1 = TruncatedSeries::monomial(UniversalMotive::sym(1), ev(&[1, 1]), cap(&[2, 2])).unwrap();
        assert_eq!(s1.coefficient(&ev(&[1, 1])).unwrap(), UniversalMotive::sym(1));
        assert_eq!(s1.len(), 1);
        assert!(matches!(
            S::monomial(BigInt::from(1), ev(&[0]), cap(&[3, 3])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn add_cases() {
        let a = uni(&[1, 1], 3);
        let b = uni(&[1, -1], 3);
        assert_eq!(a.add(&b).unwrap(), uni(&[2], 3));
        assert_eq!(a.add(&S::zero(cap(&[3]))).unwrap(), a);
        let s1 = TruncatedSeries::monomial(UniversalMotive::sym(1), ev(&[1]), cap(&[2])).unwrap();
        let l = TruncatedSeries::monomial(UniversalMotive::lefschetz(), ev(&[1]), cap(&[2])).unwrap();
        let sum = s1.add(&l).unwrap();
        assert_eq!(
            sum.coefficient(&ev(&[1])).unwrap(),
            UniversalMotive::sym(1).add(&UniversalMotive::lefschetz())
        );
        assert!(matches!(a.add(&uni(&[1], 2)), Err(Error::CapMismatch { .. })));
    }

    #[test]
    fn mul_cases() {
        let a = uni(&[1, 1], 2);
        assert_eq!(a.mul(&a).unwrap(), uni(&[1, 2, 1], 2));
        let a = uni(&[1, 1], 1);
        assert_eq!(a.mul(&a).unwrap(), uni(&[1, 2], 1));
        let zeta = TruncatedSeries::from_terms(
            cap(&[3]),
            (0..=3).map(|n| (ev(&[n]), UniversalMotive::sym(n))),
        )
        .unwrap();
        assert_eq!(zeta.mul(&TruncatedSeries::one(cap(&[3]))).unwrap(), zeta);
    }

    #[test]
    fn invert_cases() {
        assert_eq!(uni(&[1, -1], 3).invert().unwrap(), uni(&[1, 1, 1, 1], 3));
        assert_eq!(S::one(cap(&[4])).invert().unwrap(), S::one(cap(&[4])));
        let l = UniversalMotive::lefschetz();
        let f = TruncatedSeries::from_terms(
            cap(&[2]),
            [(ev(&[0]), UniversalMotive::one()), (ev(&[1]), l.neg())],
        )
        .unwrap();
        let expected = TruncatedSeries::from_terms(
            cap(&[2]),
            (0..=2).map(|k| (ev(&[k]), UniversalMotive::lefschetz_pow(k))),
        )
        .unwrap();
        assert_eq!(f.invert().unwrap(), expected);
        assert_eq!(uni(&[2, 1], 3).invert(), Err(Error::NotInvertible));
        assert_eq!(uni(&[0, 1], 3).invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn invert_multivariate() {
        // 1 - q1 - q2 has inverse sum of binomial(a+b, a) q1^a q2^b
        let c = cap(&[3, 2]);
        let f = S::from_terms(
            c.clone(),
            [(ev(&[0, 0]), 1), (ev(&[1, 0]), -1), (ev(&[0, 1]), -1)]
                .map(|(e, x)| (e, BigInt::from(x))),
        )
        .unwrap();
        let g = f.invert().unwrap();
        assert_eq!(g.coefficient(&ev(&[3, 2])).unwrap(), BigInt::from(10));
        assert_eq!(f.mul(&g).unwrap(), S::one(c));
    }

    #[test]
    fn substitute_cases() {
        let zeta = TruncatedSeries::from_terms(
            cap(&[2]),
            (0..=2).map(|n| (ev(&[n]), UniversalMotive::sym(n))),
        )
        .unwrap();
        let l = UniversalMotive::lefschetz();
        let out = TruncatedSeries::substitute(&zeta, &l, &ev(&[1, 1]), cap(&[2, 2])).unwrap();
        let expected = TruncatedSeries::from_terms(
            cap(&[2, 2]),
            [
                (ev(&[0, 0]), UniversalMotive::one()),
                (ev(&[1, 1]), l.mul(&UniversalMotive::sym(1))),
                (ev(&[2, 2]), UniversalMotive::lefschetz_pow(2).mul(&UniversalMotive::sym(2))),
            ],
        )
        .unwrap();
        assert_eq!(out, expected);

        let f = uni(&[1, 1], 3);
        let out = S::substitute(&f, &BigInt::from(1), &ev(&[0, 1]), cap(&[3, 3])).unwrap();
        assert_eq!(
            out,
            S::from_terms(cap(&[3, 3]), [(ev(&[0, 0]), BigInt::from(1)), (ev(&[0, 1]), BigInt::from(1))]).unwrap()
        );

        let f = uni(&[3, -1, 4, 1], 3);
        let out = S::substitute(&f, &BigInt::from(1), &ev(&[1, 0, 0]), cap(&[3, 2, 2])).unwrap();
        for k in 0..=3u32 {
            assert_eq!(out.coefficient(&ev(&[k, 0, 0])).unwrap(), f.coefficient(&ev(&[k])).unwrap());
        }
        assert_eq!(out.len(), 4);
    }

    #[test]
    fn substitute_errors() {
        let f = uni(&[1, 1], 3);
        assert_eq!(
            S::substitute(&f, &BigInt::from(1), &ev(&[0, 0]), cap(&[3, 3])),
            Err(Error::ZeroSubstitution)
        );
        assert_eq!(
            S::substitute(&f, &BigInt::from(1), &ev(&[1, 1]), cap(&[5, 4])),
            Err(Error::SourceCapTooSmall { available: 3, needed: 4 })
        );
        let g = S::one(cap(&[1, 1]));
        assert_eq!(
            S::substitute(&g, &BigInt::from(1), &ev(&[1]), cap(&[1])),
            Err(Error::NotUnivariate(2))
        );
    }

    #[test]
    fn product_of_cases() {
        let c = cap(&[3]);
        assert_eq!(S::product_of(c.clone(), []).unwrap(), S::one(c.clone()));
        let f = uni(&[1, 2, 3], 3);
        assert_eq!(S::product_of(c.clone(), [&f]).unwrap(), f);
        let g = uni(&[1, -1], 3);
        let ginv = g.invert().unwrap();
        assert_eq!(S::product_of(c.clone(), [&g, &ginv]).unwrap(), S::one(c));
    }

    #[test]
    fn coefficient_cases() {
        let f = uni(&[1, 2], 1);
        assert_eq!(f.coefficient(&ev(&[1])).unwrap(), BigInt::from(2));
        assert_eq!(f.coefficient(&ev(&[0])).unwrap(), BigInt::from(1));
        assert!(matches!(f.coefficient(&ev(&[2])), Err(Error::OutOfCap { .. })));
    }

    #[test]
    fn pow_negative_matches_invert() {
        let f = uni(&[1, -1], 5);
        assert_eq!(f.pow(-2).unwrap(), uni(&[1, 2, 3, 4, 5, 6], 5));
        assert_eq!(f.pow(0).unwrap(), S::one(cap(&[5])));
        assert_eq!(f.pow(3).unwrap(), uni(&[1, -3, 3, -1], 5));
    }

    #[test]
    fn graded_lex_order() {
        let mut v = vec![ev(&[1, 1]), ev(&[0, 2]), ev(&[0, 0]), ev(&[2, 0]), ev(&[0, 1])];
        v.sort();
        assert_eq!(v, vec![ev(&[0, 0]), ev(&[0, 1]), ev(&[0, 2]), ev(&[1, 1]), ev(&[2, 0])]);
        assert_eq!(cap(&[1, 1]).box_exponents().len(), 4);
    }
}
