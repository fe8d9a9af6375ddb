// A low-cost-of-capital owner and a high-cost-of-capital buyer value the
// same used asset differently; the gap vanishes for new and spent assets.

use intrinsic_depreciation::{trade_surplus, Age, AssetSpec, DiscountRate};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let asset = AssetSpec::new(100.0, 10.0)?;
    let seller = DiscountRate::new(0.05)?;
    let buyer = DiscountRate::new(0.2)?;

    for age in 0..=10 {
        let gap = trade_surplus(&asset, Age::new(f64::from(age))?, seller, buyer)?;
        println!("age {age:>2}: buyer values it {gap:>8.4} above the seller");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
