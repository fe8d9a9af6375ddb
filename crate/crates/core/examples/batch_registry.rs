// Values a small registry of assets. One record is past its lifetime and is
// reported as an error while the rest are still valued.

use intrinsic_depreciation::registry::{parse_csv, render_batch, run_batch};
use intrinsic_depreciation::report::OutputFormat;

const REGISTRY: &str = "\
id,cost,lifetime,rate,age
compressor,18000,12,0.09,4
forklift,32000,8,12%,6
valve,450,5,0.09,7
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let records = parse_csv(REGISTRY)?;
    let report = run_batch(&records);

    for entry in &report.entries {
        println!(
            "{:<12} age {:>2}: intrinsic value {:>10.4}",
            entry.id,
            entry.age.value(),
            entry.intrinsic_value.0
        );
    }
    for error in &report.errors {
        println!("{:<12} rejected: {}", error.id, error.reason);
    }
    print!("{}", render_batch(OutputFormat::Json, &report, true));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
