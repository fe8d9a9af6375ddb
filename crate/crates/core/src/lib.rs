//! Intrinsic valuation and depreciation of assets that are replaced forever at
//! a fixed cost and lifetime.
//!
//! The value of an asset of age `a` is the discounted saving from deferring
//! its perpetual replacement stream by the remaining life `l - a`. Depreciation
//! is the change in that value. Classical straight-line, double-declining and
//! sum-of-years-digits book values are provided for comparison.
//!
//! ```
//! use intrinsic_depreciation::{intrinsic_value, Age, AssetSpec, DiscountRate};
//!
//! let asset = AssetSpec::new(100.0, 10.0)?;
//! let rate = DiscountRate::new(0.2)?;
//! let value = intrinsic_value(&asset, rate, Age::new(5.0)?)?;
//! assert!((value.amount - 71.3329).abs() < 1e-4);
//! # Ok::<(), intrinsic_depreciation::ValuationError>(())
//! ```

pub mod classic;
pub mod cli;
pub mod error;
pub mod registry;
pub mod report;
pub mod schedule;
pub mod valuation;

pub use classic::{
    double_declining_book_value, straight_line_book_value, sum_of_years_book_value, Method,
};
pub use error::{Result, ValuationError};
pub use schedule::{
    build_schedule, chord_gap, compare_methods, rate_sweep, trade_surplus, ComparisonReport,
    Schedule, ScheduleRow, SweepReport,
};
pub use valuation::{
    delayed_present_cost, intrinsic_depreciation, intrinsic_value, perpetuity_oracle, present_cost,
    Age, AssetSpec, DiscountRate, Valuation, ValuationKind,
};
