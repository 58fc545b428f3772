#![allow(dead_code)]

use proptest::collection::vec;
use proptest::prelude::*;

use nquot_core::{BigInt, CapVector, ExponentVector, Monomial, TruncatedSeries, UniversalMotive};

pub fn small_motive() -> impl Strategy<Value = UniversalMotive> {
    let term = (0u32..3, vec((1u32..4, 0u32..3), 0..3), -4i64..5);
    vec(term, 0..5).prop_map(|terms| {
        let mut acc = UniversalMotive::default();
        for (l, syms, c) in terms {
            let mono = syms
                .into_iter()
                .fold(Monomial::lefschetz_pow(l), |m, (i, p)| {
                    (0..p).fold(m, |m, _| m.mul(&Monomial::sym(i)))
                });
            acc = nquot_core::CoefficientRing::add(&acc, &UniversalMotive::from_monomial(c, mono));
        }
        acc
    })
}

pub fn cap_strategy() -> impl Strategy<Value = CapVector> {
    vec(0u32..4, 1..3).prop_map(|c| CapVector::new(c).unwrap())
}

/// A series with small integer coefficients inside the given cap.
pub fn int_series(cap: CapVector) -> impl Strategy<Value = TruncatedSeries<BigInt>> {
    let boxed = cap.box_exponents();
    let n = boxed.len();
    vec((0..n, -3i64..4), 0..6).prop_map(move |terms| {
        TruncatedSeries::from_terms(
            cap.clone(),
            terms
                .into_iter()
                .map(|(k, c)| (boxed[k].clone(), BigInt::from(c))),
        )
        .unwrap()
    })
}

/// Same, with constant term forced to a unit so the series is invertible.
pub fn invertible_int_series(cap: CapVector) -> impl Strategy<Value = TruncatedSeries<BigInt>> {
    (int_series(cap.clone()), prop::bool::ANY).prop_map(move |(s, neg)| {
        let zero = ExponentVector::zero(cap.dim());
        let c0 = s.coefficient(&zero).unwrap();
        let want = BigInt::from(if neg { -1 } else { 1 });
        let fix = TruncatedSeries::monomial(want - c0, zero, cap.clone()).unwrap();
        s.add(&fix).unwrap()
    })
}

pub fn motive_series(cap: CapVector) -> impl Strategy<Value = TruncatedSeries<UniversalMotive>> {
    let boxed = cap.box_exponents();
    let n = boxed.len();
    vec((0..n, small_motive()), 0..4).prop_map(move |terms| {
        TruncatedSeries::from_terms(
            cap.clone(),
            terms.into_iter().map(|(k, c)| (boxed[k].clone(), c)),
        )
        .unwrap()
    })
}

/// Two caps `small <= large` of the same dimension.
pub fn nested_caps() -> impl Strategy<Value = (CapVector, CapVector)> {
    vec((0u32..3, 0u32..3), 1..3).prop_map(|pairs| {
        let small: Vec<u32> = pairs.iter().map(|p| p.0).collect();
        let large: Vec<u32> = pairs.iter().map(|p| p.0 + p.1).collect();
        (CapVector::new(small).unwrap(), CapVector::new(large).unwrap())
    })
}
