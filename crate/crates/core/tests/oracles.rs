//! Reference values reproduced by brute force, independent of the closed forms.

use intrinsic_depreciation::*;

/// Discounted replacement outlays `-C (1+r)^-(delay + l k)` for `k = 0..terms`,
/// summed smallest first.
fn replacement_stream(cost: f64, life: f64, rate: f64, delay: f64, terms: u32) -> f64 {
    (0..terms)
        .rev()
        .map(|k| -cost / (1.0 + rate).powf(delay + life * f64::from(k)))
        .sum()
}

/// Intrinsic value as the difference of two truncated perpetuities.
fn value_by_summation(cost: f64, life: f64, rate: f64, age: f64) -> f64 {
    let now = replacement_stream(cost, life, rate, 0.0, 2_000);
    let deferred = replacement_stream(cost, life, rate, life - age, 2_000);
    deferred - now
}

fn asset() -> AssetSpec {
    AssetSpec::new(100.0, 10.0).unwrap()
}

fn rate(r: f64) -> DiscountRate {
    DiscountRate::new(r).unwrap()
}

fn age(a: f64) -> Age {
    Age::new(a).unwrap()
}

#[test]
fn present_cost_matches_summation() {
    let oracle = replacement_stream(100.0, 10.0, 0.2, 0.0, 500);
    assert!((oracle - -119.2614).abs() < 5e-5);
    let p = present_cost(&asset(), rate(0.2)).unwrap().amount;
    assert!((p - oracle).abs() / oracle.abs() < 1e-12);
}

#[test]
fn delayed_cost_matches_summation() {
    for (a, expected) in [(0.0, -19.2614), (5.0, -47.9285), (10.0, -119.2614)] {
        let oracle = replacement_stream(100.0, 10.0, 0.2, 10.0 - a, 500);
        assert!((oracle - expected).abs() < 5e-5, "a={a}: {oracle}");
        let d = delayed_present_cost(&asset(), rate(0.2), age(a))
            .unwrap()
            .amount;
        assert!((d - oracle).abs() / oracle.abs() < 1e-12);
    }
}

#[test]
fn intrinsic_value_matches_summation() {
    for (a, expected) in [(0.0, 100.0), (1.0, 96.1477), (5.0, 71.3329), (10.0, 0.0)] {
        let oracle = value_by_summation(100.0, 10.0, 0.2, a);
        assert!((oracle - expected).abs() < 5e-5, "a={a}: {oracle}");
        let v = intrinsic_value(&asset(), rate(0.2), age(a)).unwrap().amount;
        assert!((v - oracle).abs() < 1e-10);
    }
}

#[test]
fn first_period_depreciation_matches_direct_arithmetic() {
    let direct = -100.0 * 0.2 / (1.2_f64.powi(10) - 1.0);
    assert!((direct - -3.8523).abs() < 5e-5);
    let dv = intrinsic_depreciation(&asset(), rate(0.2), age(0.0), age(1.0)).unwrap();
    assert!((dv - direct).abs() < 1e-12);
}

#[test]
fn one_term_oracle_is_two_outlays() {
    let direct = -100.0 - 100.0 / 1.2_f64.powi(10);
    assert!((direct - -116.1506).abs() < 5e-5);
    let p1 = perpetuity_oracle(&asset(), rate(0.2), 1).unwrap();
    assert!((p1 - direct).abs() < 1e-12);
}

#[test]
fn classical_values_match_period_tables() {
    // running balances, one period at a time
    let mut ddb = 100.0_f64;
    let mut syd = 100.0_f64;
    for n in 1..=10u32 {
        ddb -= ddb * 0.2;
        syd -= 100.0 * f64::from(10 - n + 1) / 55.0;
        assert!((double_declining_book_value(&asset(), n).unwrap() - ddb).abs() < 1e-9);
        assert!((sum_of_years_book_value(&asset(), n).unwrap() - syd).abs() < 1e-9);
    }
    assert!((ddb - 10.7374).abs() < 5e-5);
}

#[test]
fn chord_gap_argmax_by_enumeration() {
    // enumerate the integer grid with the summation oracle
    let gaps: Vec<f64> = (0..=10)
        .map(|a| value_by_summation(100.0, 10.0, 0.2, f64::from(a)) - (100.0 - 10.0 * f64::from(a)))
        .collect();
    let (argmax, best) =
        gaps.iter().enumerate().fold(
            (0, f64::MIN),
            |acc, (i, &g)| if g > acc.1 { (i, g) } else { acc },
        );
    assert_eq!(argmax, 6);
    assert!((best - 21.7472).abs() < 5e-5);
    assert!((chord_gap(&asset(), rate(0.2)).unwrap() - best).abs() < 1e-9);
}

#[test]
fn surplus_matches_two_summations() {
    let oracle =
        value_by_summation(100.0, 10.0, 0.2, 5.0) - value_by_summation(100.0, 10.0, 0.05, 5.0);
    assert!((oracle - 15.2642).abs() < 5e-5);
    let s = trade_surplus(&asset(), age(5.0), rate(0.05), rate(0.2)).unwrap();
    assert!((s - oracle).abs() < 1e-9);
}

#[test]
fn zero_rate_limit_is_straight_line() {
    for a in [0.0, 2.5, 5.0, 7.5, 10.0] {
        let v = intrinsic_value(&asset(), rate(1e-9), age(a))
            .unwrap()
            .amount;
        let sl = 100.0 * (1.0 - a / 10.0);
        assert!((v - sl).abs() <= 1e-6 * 100.0, "a={a}: {v} vs {sl}");
    }
}
