//! The coefficient-ring abstraction shared by every series in the crate.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

/// An exact commutative ring with decidable equality.
///
/// Implementors must keep values in a canonical form so that `==` is ring
/// equality.
pub trait CoefficientRing: Clone + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    /// Multiplicative inverse when `self` is a unit, `None` otherwise.
    fn unit_inverse(&self) -> Option<Self>;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn from_int(n: i64) -> Self {
        let one = Self::one();
        let mut acc = Self::zero();
        let mut unit = if n < 0 { one.neg() } else { one };
        let mut k = n.unsigned_abs();
        // double-and-add
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add(&unit);
            }
            k >>= 1;
            if k > 0 {
                unit = unit.add(&unit);
            }
        }
        acc
    }

    fn from_bigint(c: &BigInt) -> Self {
        if let Ok(small) = i64::try_from(c) {
            return Self::from_int(small);
        }
        let base = Self::from_int(1 << 32);
        let (sign, digits) = c.to_u32_digits();
        let mut acc = Self::zero();
        for d in digits.iter().rev() {
            acc = acc.mul(&base).add(&Self::from_int(i64::from(*d)));
        }
        if sign == Sign::Minus {
            acc.neg()
        } else {
            acc
        }
    }
}

impl CoefficientRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn unit_inverse(&self) -> Option<Self> {
        if One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
    fn from_bigint(c: &BigInt) -> Self {
        c.clone()
    }
}

/// Writes `coeff*mono` the way all canonical renderings in this crate do:
/// unit coefficients are elided, the sign is returned separately.
pub(crate) fn write_signed_term(
    out: &mut String,
    first: bool,
    coeff: &BigInt,
    mono: &str,
) {
    let negative = coeff.is_negative();
    let magnitude = coeff.abs();
    match (first, negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    if mono.is_empty() {
        out.push_str(&magnitude.to_string());
    } else if One::is_one(&magnitude) {
        out.push_str(mono);
    } else {
        out.push_str(&magnitude.to_string());
        out.push('*');
        out.push_str(mono);
    }
}
