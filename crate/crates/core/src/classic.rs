//! Classical accounting depreciation used as baselines.
//!
//! None of these carry a salvage value. Double-declining balance has no
//! switch to straight line and no final write-off, so it leaves a residual of
//! `C (1 - 2/l)^l` at end of life.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Result, ValuationError};
use crate::valuation::{Age, AssetSpec};

/// Depreciation method. Only [`Method::Intrinsic`] uses a cost of capital.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Intrinsic,
    StraightLine,
    DoubleDeclining,
    SumOfYears,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Intrinsic,
        Method::StraightLine,
        Method::DoubleDeclining,
        Method::SumOfYears,
    ];

    /// Short name used on the command line and in column headers.
    pub fn token(self) -> &'static str {
        match self {
            Method::Intrinsic => "intrinsic",
            Method::StraightLine => "sl",
            Method::DoubleDeclining => "ddb",
            Method::SumOfYears => "syd",
        }
    }

    pub fn uses_rate(self) -> bool {
        matches!(self, Method::Intrinsic)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Method {
    type Err = ValuationError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "intrinsic" => Ok(Method::Intrinsic),
            "sl" | "straight_line" | "straight-line" => Ok(Method::StraightLine),
            "ddb" | "double_declining" | "double-declining" => Ok(Method::DoubleDeclining),
            "syd" | "sum_of_years" | "sum-of-years" => Ok(Method::SumOfYears),
            _ => Err(ValuationError::invalid(format!(
                "unknown method `{}`",
                s.trim()
            ))),
        }
    }
}

pub fn straight_line_book_value(asset: &AssetSpec, age: Age) -> Result<f64> {
    asset.check_age(age)?;
    Ok(asset.cost() * (1.0 - age.value() / asset.lifetime()))
}

/// Book value after `age` full periods at twice the straight-line rate.
///
/// The rate is capped at 100% so a one-period life cannot go negative.
pub fn double_declining_book_value(asset: &AssetSpec, age: u32) -> Result<f64> {
    let life = period_table_life(asset, age)?;
    let retained = (1.0 - 2.0 / f64::from(life)).max(0.0);
    Ok(asset.cost() * retained.powf(f64::from(age)))
}

/// Book value after `age` periods where period `j` expenses
/// `C (l - j + 1) / (l (l + 1) / 2)`.
pub fn sum_of_years_book_value(asset: &AssetSpec, age: u32) -> Result<f64> {
    let life = u64::from(period_table_life(asset, age)?);
    let age = u64::from(age);
    let digits = life * (life + 1) / 2;
    // sum of (l - j + 1) for j in 1..=age, kept in integers
    let expensed = age * (2 * life - age + 1) / 2;
    let remaining = (digits - expensed) as f64 / digits as f64;
    Ok(asset.cost() * remaining)
}

fn period_table_life(asset: &AssetSpec, age: u32) -> Result<u32> {
    let life = asset.whole_lifetime()?;
    if age > life {
        return Err(ValuationError::AgeOutOfRange {
            age: f64::from(age),
            lifetime: asset.lifetime(),
        });
    }
    Ok(life)
}
