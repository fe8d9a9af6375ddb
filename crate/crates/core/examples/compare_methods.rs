// Intrinsic book values against straight-line, double-declining and
// sum-of-years-digits for a $100 asset with a ten-year life.

use intrinsic_depreciation::report::{render_comparison, OutputFormat};
use intrinsic_depreciation::{compare_methods, AssetSpec, DiscountRate, Method};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let asset = AssetSpec::new(100.0, 10.0)?;
    let rate = DiscountRate::new(0.2)?;
    let report = compare_methods(&asset, &Method::ALL, rate)?;

    print!(
        "{}",
        render_comparison(OutputFormat::Table, &report, Some(rate), true)
    );

    let ddb = report.schedule(Method::DoubleDeclining).expect("requested");
    println!(
        "double-declining leaves {:.4} on the books at end of life",
        ddb.book_value(10).unwrap_or_default()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
