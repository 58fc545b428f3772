//! Exact generating functions for motives of nested Quot schemes of points on
//! a smooth curve.
//!
//! The generating function `Z_{C,r,d}(q_1, ..., q_d)` is computed three ways:
//! as a product of shifted Kapranov zeta functions ([`zeta`]), as a sum over
//! Białynicki-Birula strata ([`strata`]), and as a motivic exponential
//! ([`exp`]). Motivic measures ([`measure`]) specialize it to Hodge–Deligne
//! polynomials, signed Poincaré polynomials and Euler characteristics, which
//! [`closed_form`] expands independently.

pub mod closed_form;
pub mod error;
pub mod exp;
pub mod measure;
pub mod motive;
pub mod poly;
pub mod ring;
pub mod series;
pub mod strata;
mod text;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use exp::{exp_plus, power_structure_pow, sigma_n, ClassKind, ExpArgument, ExpTerm};
pub use measure::{
    apply_measure, e_sym_power, lift_measure_to_series, MeasureKind, MeasureSpec, MeasureValue,
    MeasuredSeries, MotivicMeasure,
};
pub use motive::{Monomial, UniversalMotive};
pub use num_bigint::BigInt;
pub use poly::{BivariatePoly, UniPoly};
pub use ring::CoefficientRing;
pub use series::{CapVector, ExponentVector, TruncatedSeries};
pub use strata::{Decomposition, DiffTuple, NestedTuple};
pub use zeta::{kapranov_zeta, main_series, nested_coefficient, shifted_zeta, QuotSeriesConfig};
