// Present cost of perpetual ownership, the cost deferred by an asset's age,
// and the brute-force sum converging on the closed form.

use intrinsic_depreciation::{
    delayed_present_cost, perpetuity_oracle, present_cost, Age, AssetSpec, DiscountRate,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let asset = AssetSpec::new(100.0, 10.0)?;
    let rate = DiscountRate::new(0.2)?;

    let p = present_cost(&asset, rate)?;
    println!("present cost of ownership: {:.4}", p.amount);

    for age in [0.0, 5.0, 10.0] {
        let d = delayed_present_cost(&asset, rate, Age::new(age)?)?;
        println!("deferred cost at age {age:>4}: {:.4}", d.amount);
    }

    for terms in [1, 2, 5, 20, 500] {
        let partial = perpetuity_oracle(&asset, rate, terms)?;
        println!("{terms:>4} replacements summed: {partial:.10}");
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
