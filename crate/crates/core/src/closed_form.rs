//! Closed-form rational products for the specialized generating functions,
//! expanded directly in `q_1, ..., q_d` without going through the universal
//! ring.

use num_bigint::BigInt;

use crate::error::Result;
use crate::poly::BivariatePoly;
use crate::ring::CoefficientRing;
use crate::series::{CapVector, ExponentVector, TruncatedSeries};

/// `1 - c * q^mono`.
fn one_minus<R: CoefficientRing>(c: R, mono: &ExponentVector, cap: &CapVector) -> Result<TruncatedSeries<R>> {
    let one = TruncatedSeries::one(cap.clone());
    one.sub(&TruncatedSeries::monomial(c, mono.clone(), cap.clone())?)
}

/// Expansion of
/// `prod_{alpha, i} (1 - u^a v^{a-1} m_i)^g (1 - u^{a-1} v^a m_i)^g
///  / ((1 - u^{a-1} v^{a-1} m_i)(1 - u^a v^a m_i))`
/// with `m_i = q_i ... q_d`.
pub fn hodge_deligne_closed_form(
    rank: u32,
    depth: usize,
    genus: u32,
    cap: &CapVector,
) -> Result<TruncatedSeries<BivariatePoly>> {
    let mut acc = TruncatedSeries::one(cap.clone());
    for alpha in 1..=rank {
        for i in 1..=depth {
            let m = ExponentVector::suffix(depth, i);
            let num_u = one_minus(BivariatePoly::monomial(1, alpha, alpha - 1), &m, cap)?;
            let num_v = one_minus(BivariatePoly::monomial(1, alpha - 1, alpha), &m, cap)?;
            let den_low = one_minus(BivariatePoly::monomial(1, alpha - 1, alpha - 1), &m, cap)?;
            let den_high = one_minus(BivariatePoly::monomial(1, alpha, alpha), &m, cap)?;
            let factor = num_u
                .mul(&num_v)?
                .pow(i64::from(genus))?
                .mul(&den_low.mul(&den_high)?.invert()?)?;
            acc = acc.mul(&factor)?;
        }
    }
    Ok(acc)
}

/// Expansion of `prod_i (1 - q_i ... q_d)^{-r (2 - 2g)}`.
pub fn euler_closed_form(
    rank: u32,
    depth: usize,
    genus: u32,
    cap: &CapVector,
) -> Result<TruncatedSeries<BigInt>> {
    let exponent = -(i64::from(rank) * (2 - 2 * i64::from(genus)));
    let mut acc = TruncatedSeries::one(cap.clone());
    for i in 1..=depth {
        let m = ExponentVector::suffix(depth, i);
        acc = acc.mul(&one_minus(BigInt::from(1), &m, cap)?.pow(exponent)?)?;
    }
    Ok(acc)
}
