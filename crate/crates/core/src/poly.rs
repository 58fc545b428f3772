//! Target rings of the motivic measures: `Z[u,v]` and `Z[t]`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{write_signed_term, CoefficientRing};
use crate::text::{parse_sum, power_str};

/// A polynomial in `u` and `v` with integer coefficients, stored sparsely.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePoly {
    pub fn monomial(coeff: impl Into<BigInt>, u_exp: u32, v_exp: u32) -> Self {
        let mut p = Self::default();
        p.add_term((u_exp, v_exp), coeff.into());
        p
    }

    pub fn u() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// The Hodge–Deligne polynomial `1 - g*u - g*v + u*v` of a genus `g` curve.
    pub fn curve(genus: u32) -> Self {
        let g = BigInt::from(genus);
        let mut p = Self::monomial(1, 0, 0);
        p.add_term((1, 0), -g.clone());
        p.add_term((0, 1), -g);
        p.add_term((1, 1), BigInt::from(1));
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut p = Self::default();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn coeff(&self, u_exp: u32, v_exp: u32) -> BigInt {
        self.terms.get(&(u_exp, v_exp)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree in `u` and `v`; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// The polynomial with `u` and `v` exchanged.
    pub fn swap_uv(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())))
    }

    /// Substitutes `u = v = t`.
    pub fn diagonal(&self) -> UniPoly {
        UniPoly::from_terms(self.terms.iter().map(|(&(i, j), c)| (i + j, c.clone())))
    }

    /// Evaluates at `u = v = 1`.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn add_term(&mut self, key: (u32, u32), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl CoefficientRing for BivariatePoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::monomial(1, 0, 0)
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
        for (&k, c) in &other.terms {
            self.add_term(k, c.clone());
        }
    }
    fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &other.terms {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            let c = self.terms.get(&(0, 0))?;
            c.unit_inverse().map(|c| Self::monomial(c, 0, 0))
        } else {
            None
        }
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // graded, u before v within a degree
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|(a, _), (b, _)| (a.0 + a.1).cmp(&(b.0 + b.1)).then(b.0.cmp(&a.0)));
        let mut out = String::new();
        for (idx, (&(i, j), c)) in keys.into_iter().enumerate() {
            let mut factors = Vec::new();
            if i > 0 {
                factors.push(power_str("u", i));
            }
            if j > 0 {
                factors.push(power_str("v", j));
            }
            write_signed_term(&mut out, idx == 0, c, &factors.join("*"));
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BivariatePoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Self::default();
        for (coeff, factors) in parse_sum(s)? {
            let (mut i, mut j) = (0, 0);
            for (name, pow) in factors {
                match name.as_str() {
                    "u" => i += pow,
                    "v" => j += pow,
                    other => return Err(Error::Parse(format!("unknown variable '{other}'"))),
                }
            }
            p.add_term((i, j), coeff);
        }
        Ok(p)
    }
}

/// A polynomial in a single variable `t` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    terms: BTreeMap<u32, BigInt>,
}

impl UniPoly {
    pub fn monomial(coeff: impl Into<BigInt>, exp: u32) -> Self {
        let mut p = Self::default();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, BigInt)>) -> Self {
        let mut p = Self::default();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &BigInt)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn add_term(&mut self, key: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl CoefficientRing for UniPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::monomial(1, 0)
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
        for (&k, c) in &other.terms {
            self.add_term(k, c.clone());
        }
    }
    fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&a, c) in &self.terms {
            for (&b, d) in &other.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            let c = self.terms.get(&0)?;
            c.unit_inverse().map(|c| Self::monomial(c, 0))
        } else {
            None
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (idx, (&k, c)) in self.terms.iter().enumerate() {
            let mono = if k == 0 { String::new() } else { power_str("t", k) };
            write_signed_term(&mut out, idx == 0, c, &mono);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for UniPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Self::default();
        for (coeff, factors) in parse_sum(s)? {
            let mut k = 0;
            for (name, pow) in factors {
                if name != "t" {
                    return Err(Error::Parse(format!("unknown variable '{name}'")));
                }
                k += pow;
            }
            p.add_term(k, coeff);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_polynomial_renders_in_graded_order() {
        assert_eq!(BivariatePoly::curve(1).to_string(), "1 - u - v + u*v");
        assert_eq!(BivariatePoly::curve(0).to_string(), "1 + u*v");
        assert_eq!(BivariatePoly::zero().to_string(), "0");
    }

    #[test]
    fn parse_and_render_agree() {
        for s in ["1 - 2*u - 2*v + u*v", "-u^3*v^2 + 7", "0"] {
            let p: BivariatePoly = s.parse().unwrap();
            let again: BivariatePoly = p.to_string().parse().unwrap();
            assert_eq!(p, again);
        }
        let t: UniPoly = "1 - 2*t + t^2".parse().unwrap();
        assert_eq!(t.to_string(), "1 - 2*t + t^2");
        assert!("1 + w".parse::<BivariatePoly>().is_err());
    }

    #[test]
    fn diagonal_and_units() {
        let c = BivariatePoly::curve(2);
        assert_eq!(c.diagonal().to_string(), "1 - 4*t + t^2");
        assert_eq!(c.sum_of_coefficients(), BigInt::from(-2));
        assert_eq!(BivariatePoly::from_int(-1).unit_inverse(), Some(BivariatePoly::from_int(-1)));
        assert_eq!(BivariatePoly::from_int(2).unit_inverse(), None);
        assert_eq!(c.unit_inverse(), None);
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = BivariatePoly::u().add(&BivariatePoly::u().neg());
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }
}
