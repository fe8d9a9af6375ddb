//! Period schedules, method comparisons, cost-of-capital sweeps and the
//! buyer/seller valuation gap.
//!
//! Schedules are annual: one row per lifetime period, expense booked at the
//! end of the period, so the lifetime must be a whole number of periods.

use serde::Serialize;

use crate::classic::{
    double_declining_book_value, straight_line_book_value, sum_of_years_book_value, Method,
};
use crate::error::{Result, ValuationError};
use crate::valuation::{intrinsic_depreciation, intrinsic_value, Age, AssetSpec, DiscountRate};

/// One period of a schedule. `expense` is never positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScheduleRow {
    pub period: u32,
    pub age_end: Age,
    pub expense: f64,
    pub book_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Schedule {
    pub method: Method,
    pub rate: Option<DiscountRate>,
    pub asset: AssetSpec,
    pub rows: Vec<ScheduleRow>,
}

impl Schedule {
    /// Book value at the end of `period`; period 0 is the purchase cost.
    pub fn book_value(&self, period: u32) -> Option<f64> {
        match period {
            0 => Some(self.asset.cost()),
            n => self.rows.get(n as usize - 1).map(|r| r.book_value),
        }
    }

    pub fn total_expense(&self) -> f64 {
        self.rows.iter().map(|r| r.expense).sum()
    }
}

/// Schedules for several methods over the same asset and periods.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub asset: AssetSpec,
    pub schedules: Vec<Schedule>,
}

impl ComparisonReport {
    pub fn periods(&self) -> usize {
        self.schedules.first().map_or(0, |s| s.rows.len())
    }

    pub fn schedule(&self, method: Method) -> Option<&Schedule> {
        self.schedules.iter().find(|s| s.method == method)
    }
}

/// Intrinsic values over integer ages `0..=lifetime`, one row per rate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub asset: AssetSpec,
    pub rates: Vec<DiscountRate>,
    /// `values[i][a]` is the value at age `a` under `rates[i]`.
    pub values: Vec<Vec<f64>>,
}

/// Builds the per-period schedule for `method`.
///
/// The intrinsic method needs `rate` (zero is allowed and yields the
/// straight-line limit); the classical methods ignore it.
pub fn build_schedule(
    asset: &AssetSpec,
    method: Method,
    rate: Option<DiscountRate>,
) -> Result<Schedule> {
    let life = asset.whole_lifetime()?;
    let rate = match (method.uses_rate(), rate) {
        (true, None) => return Err(ValuationError::MissingRate),
        (true, Some(r)) => Some(r),
        (false, _) => None,
    };
    let cost = asset.cost();
    let l = f64::from(life);

    let mut rows = Vec::with_capacity(life as usize);
    let mut previous_book = cost;
    for period in 1..=life {
        let start = Age::new(f64::from(period - 1))?;
        let end = Age::new(f64::from(period))?;
        let (expense, book_value) = match method {
            Method::Intrinsic => {
                let r = rate.expect("checked above");
                let expense = intrinsic_depreciation(asset, r, start, end)?;
                (expense, intrinsic_value(asset, r, end)?.amount)
            }
            Method::StraightLine => (-cost / l, straight_line_book_value(asset, end)?),
            Method::DoubleDeclining => {
                let book = double_declining_book_value(asset, period)?;
                (book - previous_book, book)
            }
            Method::SumOfYears => {
                let digits = l * (l + 1.0) / 2.0;
                let expense = -cost * f64::from(life - period + 1) / digits;
                (expense, sum_of_years_book_value(asset, period)?)
            }
        };
        rows.push(ScheduleRow {
            period,
            age_end: end,
            expense,
            book_value,
        });
        previous_book = book_value;
    }

    Ok(Schedule {
        method,
        rate,
        asset: *asset,
        rows,
    })
}

/// One schedule per method, in the order given. `rate` feeds the intrinsic
/// entries only.
pub fn compare_methods(
    asset: &AssetSpec,
    methods: &[Method],
    rate: DiscountRate,
) -> Result<ComparisonReport> {
    if methods.is_empty() {
        return Err(ValuationError::invalid("at least one method is required"));
    }
    let schedules = methods
        .iter()
        .map(|&m| build_schedule(asset, m, Some(rate)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ComparisonReport {
        asset: *asset,
        schedules,
    })
}

pub fn rate_sweep(asset: &AssetSpec, rates: &[DiscountRate]) -> Result<SweepReport> {
    if rates.is_empty() {
        return Err(ValuationError::invalid("at least one rate is required"));
    }
    let life = asset.whole_lifetime()?;
    let values = rates
        .iter()
        .map(|&r| {
            (0..=life)
                .map(|a| Ok(intrinsic_value(asset, r, Age::new(f64::from(a))?)?.amount))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        asset: *asset,
        rates: rates.to_vec(),
        values,
    })
}

/// Largest gap, over integer ages, between the intrinsic value curve and the
/// straight line joining its endpoints. Zero at `r = 0`, growing with `r`.
pub fn chord_gap(asset: &AssetSpec, rate: DiscountRate) -> Result<f64> {
    let life = asset.whole_lifetime()?;
    (0..=life).try_fold(0.0_f64, |gap, a| {
        let age = Age::new(f64::from(a))?;
        let curve = intrinsic_value(asset, rate, age)?.amount;
        let chord = straight_line_book_value(asset, age)?;
        Ok(gap.max(curve - chord))
    })
}

/// How much more a buyer values the asset than its current owner, purely
/// from their different costs of capital. Non-negative when the buyer's rate
/// is at least the seller's.
pub fn trade_surplus(
    asset: &AssetSpec,
    age: Age,
    seller_rate: DiscountRate,
    buyer_rate: DiscountRate,
) -> Result<f64> {
    let seller = intrinsic_value(asset, seller_rate, age)?.amount;
    let buyer = intrinsic_value(asset, buyer_rate, age)?.amount;
    Ok(buyer - seller)
}
