// A full intrinsic depreciation schedule rendered as a table and as CSV.

use intrinsic_depreciation::report::{render_schedule, OutputFormat};
use intrinsic_depreciation::{build_schedule, AssetSpec, DiscountRate, Method};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let asset = AssetSpec::new(100.0, 10.0)?;
    let schedule = build_schedule(&asset, Method::Intrinsic, Some(DiscountRate::new(0.2)?))?;

    print!("{}", render_schedule(OutputFormat::Table, &schedule, true));
    println!("total expense: {:.4}", schedule.total_expense());

    let sl = build_schedule(&asset, Method::StraightLine, None)?;
    print!("{}", render_schedule(OutputFormat::Csv, &sl, true));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
