// Intrinsic value across an asset's life, including fractional ages, and the
// depreciation booked between two ages.

use intrinsic_depreciation::{
    intrinsic_depreciation, intrinsic_value, Age, AssetSpec, DiscountRate,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let asset = AssetSpec::new(100.0, 10.0)?;
    let rate = DiscountRate::new(0.2)?;

    for tenths in (0..=20).step_by(5) {
        let age = Age::new(f64::from(tenths) / 2.0)?;
        let v = intrinsic_value(&asset, rate, age)?;
        println!("age {:>4}: {:>9.4}", age.value(), v.amount);
    }

    let half_year = intrinsic_depreciation(&asset, rate, Age::new(4.5)?, Age::new(5.0)?)?;
    println!("depreciation from 4.5 to 5.0: {half_year:.4}");

    // a zero cost of capital degenerates to straight line
    let flat = intrinsic_value(&asset, DiscountRate::new(0.0)?, Age::new(5.0)?)?;
    println!("value at age 5 with r = 0: {:.4}", flat.amount);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
