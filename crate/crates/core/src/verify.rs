//! Cross-checks between the independent routes to the generating function.

use std::fmt;

use num_bigint::BigInt;

use crate::closed_form::{euler_closed_form, hodge_deligne_closed_form};
use crate::error::Result;
use crate::exp::exp_reformulation;
use crate::measure::{Euler, HodgeDeligne, MotivicMeasure, SignedPoincare};
use crate::motive::UniversalMotive;
use crate::ring::CoefficientRing;
use crate::series::{ExponentVector, TruncatedSeries};
use crate::strata::{enumerate_nested, euler_count, oracle_series, NestedTuple};
use crate::zeta::{depth_one_series, last_variable_slice, main_series, QuotSeriesConfig};

/// The first coefficient at which two routes disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: ExponentVector,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub mismatch: Option<Mismatch>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "PASS {}", self.name),
            Some(m) => write!(
                f,
                "FAIL {}: first difference at n={}: {} != {}",
                self.name, m.exponent, m.left, m.right
            ),
        }
    }
}

pub fn compare<R: CoefficientRing>(
    name: &str,
    left: &TruncatedSeries<R>,
    right: &TruncatedSeries<R>,
) -> CheckReport {
    let mismatch = left.first_difference(right).map(|(exponent, a, b)| Mismatch {
        exponent,
        left: a.to_string(),
        right: b.to_string(),
    });
    CheckReport { name: name.to_string(), mismatch }
}

/// Runs the full verification suite, comparing `main_series` against the
/// given strata sum.
pub fn verify_against(
    cfg: &QuotSeriesConfig,
    genus: u32,
    oracle: &TruncatedSeries<UniversalMotive>,
) -> Result<Vec<CheckReport>> {
    let main = main_series(cfg)?;
    let mut reports = vec![
        compare("strata sum = product formula", oracle, &main),
        compare("motivic exponential = product formula", &exp_reformulation(cfg)?, &main),
    ];

    let hd = HodgeDeligne { genus }.lift(&main);
    reports.push(compare(
        "signed Poincare = Hodge-Deligne at u=v=t",
        &SignedPoincare { genus }.lift(&main),
        &hd.map_coefficients(|p| p.diagonal()),
    ));
    reports.push(compare(
        "Euler = Hodge-Deligne at u=v=1",
        &Euler { genus }.lift(&main),
        &hd.map_coefficients(|p| p.sum_of_coefficients()),
    ));
    reports.push(compare(
        "Hodge-Deligne closed form",
        &hodge_deligne_closed_form(cfg.rank(), cfg.depth(), genus, cfg.cap())?,
        &hd,
    ));

    let top = *cfg.cap().as_slice().last().expect("non-empty cap");
    reports.push(compare(
        "restriction to (0,..,0,n) = depth-one formula",
        &last_variable_slice(&main)?,
        &depth_one_series(cfg.rank(), top)?,
    ));
    Ok(reports)
}

pub fn verify(cfg: &QuotSeriesConfig, genus: u32) -> Result<Vec<CheckReport>> {
    verify_against(cfg, genus, &oracle_series(cfg)?)
}

pub fn exp_check(cfg: &QuotSeriesConfig) -> Result<CheckReport> {
    Ok(compare(
        "motivic exponential = product formula",
        &exp_reformulation(cfg)?,
        &main_series(cfg)?,
    ))
}

/// One row of the Euler characteristic table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerRow {
    pub n: NestedTuple,
    pub closed_form: BigInt,
    pub measure: BigInt,
    /// Pure fixed-point count; only meaningful for genus 0.
    pub count: Option<BigInt>,
}

impl EulerRow {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.measure
            && self.count.as_ref().is_none_or(|c| *c == self.closed_form)
    }
}

pub fn euler_table(cfg: &QuotSeriesConfig, genus: u32) -> Result<Vec<EulerRow>> {
    let closed = euler_closed_form(cfg.rank(), cfg.depth(), genus, cfg.cap())?;
    let measured = Euler { genus }.lift(&main_series(cfg)?);
    let top = *cfg.cap().as_slice().last().expect("non-empty cap");
    enumerate_nested(cfg.depth(), top)
        .filter(|n| n.exponent().within(cfg.cap()))
        .map(|n| {
            let e = n.exponent();
            Ok(EulerRow {
                closed_form: closed.coefficient(&e)?,
                measure: measured.coefficient(&e)?,
                count: (genus == 0).then(|| euler_count(cfg.rank(), &n)),
                n,
            })
        })
        .collect()
}
