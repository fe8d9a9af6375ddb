//! Closed-form intrinsic valuation of a depreciable asset.
//!
//! An asset that must be replaced every `lifetime` periods, forever, at the
//! same `cost` carries a perpetual stream of replacement outlays. Discounting
//! that stream at the owner's cost of capital gives the present cost of
//! ownership. Owning an asset of age `a` pushes every outlay back by the
//! remaining life `lifetime - a`; the discounted saving from that delay is the
//! asset's intrinsic value.
//!
//! Costs are stored as positive magnitudes. Expenses (present and delayed cost,
//! depreciation) come back negative, values come back positive.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Result, ValuationError};

/// Replacement cost and lifetime of an asset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AssetSpec {
    cost: f64,
    lifetime: f64,
}

impl AssetSpec {
    pub fn new(cost: f64, lifetime: f64) -> Result<Self> {
        if !cost.is_finite() || cost <= 0.0 {
            return Err(ValuationError::invalid(format!(
                "cost must be a positive finite magnitude, got {cost}"
            )));
        }
        if !lifetime.is_finite() || lifetime <= 0.0 {
            return Err(ValuationError::invalid(format!(
                "lifetime must be positive and finite, got {lifetime}"
            )));
        }
        Ok(AssetSpec { cost, lifetime })
    }

    pub fn cost(&self) -> f64 {
        self.cost
    }

    pub fn lifetime(&self) -> f64 {
        self.lifetime
    }

    /// Lifetime as a whole number of periods, for the period-table methods.
    pub fn whole_lifetime(&self) -> Result<u32> {
        let l = self.lifetime;
        if l.fract() != 0.0 || l > f64::from(u32::MAX) {
            return Err(ValuationError::NonIntegerPeriod {
                what: "lifetime",
                value: l,
            });
        }
        Ok(l as u32)
    }

    /// Rejects ages past the end of the asset's life.
    pub fn check_age(&self, age: Age) -> Result<()> {
        if age.value() > self.lifetime {
            return Err(ValuationError::AgeOutOfRange {
                age: age.value(),
                lifetime: self.lifetime,
            });
        }
        Ok(())
    }
}

/// Per-period cost of capital as a fraction (`0.2` is 20%).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct DiscountRate(f64);

impl DiscountRate {
    pub fn new(rate: f64) -> Result<Self> {
        if !rate.is_finite() || rate < 0.0 {
            return Err(ValuationError::invalid(format!(
                "cost of capital must be a finite non-negative fraction, got {rate}"
            )));
        }
        Ok(DiscountRate(rate))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }
}

impl fmt::Display for DiscountRate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Accepts a plain fraction (`0.2`) or a percentage (`20%`).
impl FromStr for DiscountRate {
    type Err = ValuationError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, scale) = match s.strip_suffix('%') {
            Some(d) => (d.trim_end(), 100.0),
            None => (s, 1.0),
        };
        let raw: f64 = digits
            .parse()
            .map_err(|_| ValuationError::invalid(format!("unparseable rate `{s}`")))?;
        DiscountRate::new(raw / scale)
    }
}

/// Periods elapsed since purchase.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Age(f64);

impl Age {
    pub fn new(periods: f64) -> Result<Self> {
        if !periods.is_finite() || periods < 0.0 {
            return Err(ValuationError::invalid(format!(
                "age must be a finite non-negative number of periods, got {periods}"
            )));
        }
        Ok(Age(periods))
    }

    pub const NEW: Age = Age(0.0);

    pub fn value(self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ValuationKind {
    PresentCost,
    DelayedCost,
    IntrinsicValue,
}

/// A money amount attached to a point in the asset's life.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Valuation {
    pub amount: f64,
    pub age: Age,
    pub kind: ValuationKind,
}

/// `(1 + r)^t - 1` evaluated through `ln_1p`/`exp_m1`, which keeps full
/// relative precision as `r` approaches zero.
#[derive(Debug, Clone, Copy)]
struct Growth {
    log_factor: f64,
}

impl Growth {
    fn new(rate: DiscountRate) -> Self {
        Growth {
            log_factor: rate.value().ln_1p(),
        }
    }

    fn excess(self, periods: f64) -> Result<f64> {
        let g = (periods * self.log_factor).exp_m1();
        if !g.is_finite() {
            return Err(ValuationError::invalid(format!(
                "compounding over {periods} periods overflows"
            )));
        }
        Ok(g)
    }
}

fn finite(x: f64, what: &str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(ValuationError::invalid(format!("{what} is not finite")))
    }
}

/// Present cost of buying the asset now and replacing it every lifetime,
/// forever: `-C (1+r)^l / ((1+r)^l - 1)`.
///
/// Reported at `age = lifetime`, the point at which a purchase is imminent.
/// Fails with [`ValuationError::ZeroRateDivergence`] when `r = 0`.
pub fn present_cost(asset: &AssetSpec, rate: DiscountRate) -> Result<Valuation> {
    if rate.is_zero() {
        return Err(ValuationError::ZeroRateDivergence);
    }
    let growth = Growth::new(rate);
    let over_life = growth.excess(asset.lifetime)?;
    let amount = finite(-asset.cost * (1.0 + 1.0 / over_life), "present cost")?;
    Ok(Valuation {
        amount,
        age: Age(asset.lifetime),
        kind: ValuationKind::PresentCost,
    })
}

/// Present cost of the same perpetuity deferred by the remaining life:
/// `-C (1+r)^a / ((1+r)^l - 1)`, which equals `P / (1+r)^(l-a)`.
pub fn delayed_present_cost(asset: &AssetSpec, rate: DiscountRate, age: Age) -> Result<Valuation> {
    asset.check_age(age)?;
    if rate.is_zero() {
        return Err(ValuationError::ZeroRateDivergence);
    }
    let growth = Growth::new(rate);
    let over_life = growth.excess(asset.lifetime)?;
    let to_age = growth.excess(age.value())?;
    let amount = finite(-asset.cost * (1.0 + to_age) / over_life, "delayed cost")?;
    Ok(Valuation {
        amount,
        age,
        kind: ValuationKind::DelayedCost,
    })
}

/// Intrinsic value `D - P = C ((1+r)^l - (1+r)^a) / ((1+r)^l - 1)`.
///
/// At `r = 0` both costs diverge but their difference has the finite limit
/// `C (1 - a/l)`, which is returned instead.
pub fn intrinsic_value(asset: &AssetSpec, rate: DiscountRate, age: Age) -> Result<Valuation> {
    asset.check_age(age)?;
    let amount = value_fraction(asset, rate, age.value())? * asset.cost;
    Ok(Valuation {
        amount: amount.clamp(0.0, asset.cost),
        age,
        kind: ValuationKind::IntrinsicValue,
    })
}

/// Fraction of cost still held at `age`; `1` when new, `0` at end of life.
fn value_fraction(asset: &AssetSpec, rate: DiscountRate, age: f64) -> Result<f64> {
    if rate.is_zero() {
        return Ok(1.0 - age / asset.lifetime);
    }
    let growth = Growth::new(rate);
    let over_life = growth.excess(asset.lifetime)?;
    let to_age = growth.excess(age)?;
    finite((over_life - to_age) / over_life, "intrinsic value")
}

/// Change in intrinsic value between two ages,
/// `-C ((1+r)^end - (1+r)^start) / ((1+r)^l - 1)`. Never positive.
pub fn intrinsic_depreciation(
    asset: &AssetSpec,
    rate: DiscountRate,
    start: Age,
    end: Age,
) -> Result<f64> {
    asset.check_age(start)?;
    asset.check_age(end)?;
    if end < start {
        return Err(ValuationError::AgeOrderViolation {
            start: start.value(),
            end: end.value(),
        });
    }
    let consumed = if rate.is_zero() {
        (end.value() - start.value()) / asset.lifetime
    } else {
        let growth = Growth::new(rate);
        let over_life = growth.excess(asset.lifetime)?;
        (growth.excess(end.value())? - growth.excess(start.value())?) / over_life
    };
    // `+ 0.0` folds a negative zero into zero
    Ok(finite(-asset.cost * consumed, "depreciation")? + 0.0)
}

/// Brute-force present cost: the first purchase plus `terms` discounted
/// replacements, `-C - sum_{k=1..terms} C / (1+r)^(l k)`.
///
/// Sums directly from powers of `1 + r`, independent of the closed form.
pub fn perpetuity_oracle(asset: &AssetSpec, rate: DiscountRate, terms: u32) -> Result<f64> {
    if rate.is_zero() {
        return Err(ValuationError::ZeroRateDivergence);
    }
    if terms == 0 {
        return Err(ValuationError::invalid("oracle needs at least one term"));
    }
    let base = 1.0 + rate.value();
    // smallest terms first
    let tail: f64 = (1..=terms)
        .rev()
        .map(|k| asset.cost * base.powf(-asset.lifetime * f64::from(k)))
        .sum();
    finite(-asset.cost - tail, "perpetuity sum")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_asset() -> AssetSpec {
        AssetSpec::new(100.0, 10.0).unwrap()
    }

    fn rate(r: f64) -> DiscountRate {
        DiscountRate::new(r).unwrap()
    }

    fn age(a: f64) -> Age {
        Age::new(a).unwrap()
    }

    #[test]
    fn rejects_bad_domain_values() {
        assert!(AssetSpec::new(0.0, 10.0).is_err());
        assert!(AssetSpec::new(-5.0, 10.0).is_err());
        assert!(AssetSpec::new(100.0, 0.0).is_err());
        assert!(AssetSpec::new(f64::NAN, 1.0).is_err());
        assert!(DiscountRate::new(-0.01).is_err());
        assert!(DiscountRate::new(f64::INFINITY).is_err());
        assert!(Age::new(-1.0).is_err());
    }

    #[test]
    fn rate_parses_fraction_and_percent() {
        assert_eq!("0.2".parse::<DiscountRate>().unwrap().value(), 0.2);
        assert_eq!("20%".parse::<DiscountRate>().unwrap().value(), 0.2);
        assert!("-0.1".parse::<DiscountRate>().is_err());
        assert!("abc".parse::<DiscountRate>().is_err());
    }

    #[test]
    fn present_cost_examples() {
        let p = present_cost(&paper_asset(), rate(0.2)).unwrap();
        assert!((p.amount + 119.261_378_441_429_6).abs() < 1e-9);
        assert_eq!(p.kind, ValuationKind::PresentCost);

        let steep = present_cost(&paper_asset(), rate(1000.0)).unwrap();
        assert!((steep.amount + 100.0).abs() < 1e-12);

        assert_eq!(
            present_cost(&paper_asset(), rate(0.0)),
            Err(ValuationError::ZeroRateDivergence)
        );
    }

    #[test]
    fn delayed_cost_examples() {
        let a = paper_asset();
        let d0 = delayed_present_cost(&a, rate(0.2), age(0.0))
            .unwrap()
            .amount;
        assert!((d0 + 19.261_378_441_429_57).abs() < 1e-9);
        let d5 = delayed_present_cost(&a, rate(0.2), age(5.0))
            .unwrap()
            .amount;
        assert!((d5 + 47.928_473_203_378).abs() < 1e-9);
        let d10 = delayed_present_cost(&a, rate(0.2), age(10.0))
            .unwrap()
            .amount;
        let p = present_cost(&a, rate(0.2)).unwrap().amount;
        assert!((d10 - p).abs() < 1e-12);
        assert!(matches!(
            delayed_present_cost(&a, rate(0.2), age(10.5)),
            Err(ValuationError::AgeOutOfRange { .. })
        ));
        assert_eq!(
            delayed_present_cost(&a, rate(0.0), age(1.0)),
            Err(ValuationError::ZeroRateDivergence)
        );
    }

    #[test]
    fn intrinsic_value_examples() {
        let a = paper_asset();
        assert_eq!(
            intrinsic_value(&a, rate(0.2), age(0.0)).unwrap().amount,
            100.0
        );
        assert_eq!(
            intrinsic_value(&a, rate(0.2), age(10.0)).unwrap().amount,
            0.0
        );
        let v5 = intrinsic_value(&a, rate(0.2), age(5.0)).unwrap().amount;
        assert!((v5 - 71.332_905_238_051_55).abs() < 1e-9);
        let near_zero = intrinsic_value(&a, rate(1e-9), age(5.0)).unwrap().amount;
        assert!((near_zero - 50.0).abs() < 1e-6);
        assert_eq!(
            intrinsic_value(&a, rate(0.0), age(2.5)).unwrap().amount,
            75.0
        );
        assert!(intrinsic_value(&a, rate(0.2), age(11.0)).is_err());
    }

    #[test]
    fn depreciation_examples() {
        let a = paper_asset();
        let first = intrinsic_depreciation(&a, rate(0.2), age(0.0), age(1.0)).unwrap();
        assert!((first + 3.852_275_688_285_914).abs() < 1e-9);
        let none = intrinsic_depreciation(&a, rate(0.2), age(3.0), age(3.0)).unwrap();
        assert_eq!(none, 0.0);
        assert!(none.is_sign_positive());
        let full = intrinsic_depreciation(&a, rate(0.2), age(0.0), age(10.0)).unwrap();
        assert!((full + 100.0).abs() < 1e-12);
        assert!(matches!(
            intrinsic_depreciation(&a, rate(0.2), age(4.0), age(3.0)),
            Err(ValuationError::AgeOrderViolation { .. })
        ));
        assert!(matches!(
            intrinsic_depreciation(&a, rate(0.2), age(4.0), age(12.0)),
            Err(ValuationError::AgeOutOfRange { .. })
        ));
    }

    #[test]
    fn oracle_examples() {
        let a = paper_asset();
        let one = perpetuity_oracle(&a, rate(0.2), 1).unwrap();
        assert!((one + 116.150_558_288_984_58).abs() < 1e-9);
        assert!(perpetuity_oracle(&a, rate(0.2), 0).is_err());
        assert_eq!(
            perpetuity_oracle(&a, rate(0.0), 5),
            Err(ValuationError::ZeroRateDivergence)
        );
    }

    #[test]
    fn overflow_is_an_input_error() {
        let a = AssetSpec::new(100.0, 1e6).unwrap();
        assert!(matches!(
            present_cost(&a, rate(0.5)),
            Err(ValuationError::InvalidInput(_))
        ));
    }

    #[test]
    fn fractional_lifetime_is_accepted() {
        let a = AssetSpec::new(50.0, 2.5).unwrap();
        let v = intrinsic_value(&a, rate(0.1), age(1.25)).unwrap().amount;
        assert!(v > 25.0 && v < 50.0);
        assert!(a.whole_lifetime().is_err());
    }
}
