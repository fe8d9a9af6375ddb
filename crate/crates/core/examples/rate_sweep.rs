// Value curves at several costs of capital, with the gap between each curve
// and the straight-line chord.

use intrinsic_depreciation::report::{render_sweep, OutputFormat};
use intrinsic_depreciation::{chord_gap, rate_sweep, AssetSpec, DiscountRate};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let asset = AssetSpec::new(100.0, 10.0)?;
    let rates = ["1%", "5%", "10%", "20%", "50%"]
        .iter()
        .map(|r| r.parse::<DiscountRate>())
        .collect::<Result<Vec<_>, _>>()?;

    let sweep = rate_sweep(&asset, &rates)?;
    let gaps = rates
        .iter()
        .map(|&r| chord_gap(&asset, r))
        .collect::<Result<Vec<_>, _>>()?;

    print!("{}", render_sweep(OutputFormat::Csv, &sweep, &gaps, true));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
