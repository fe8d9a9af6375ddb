//! Command-line front end shared by the `intrinsic` binary and the tests.
//!
//! Exit codes: 0 success, 1 internal error, 2 invalid input, 3 a batch
//! finished but some records failed.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classic::Method;
use crate::error::ValuationError;
use crate::registry::{read_registry, render_batch, run_batch};
use crate::report::{
    render_comparison, render_schedule, render_surplus, render_sweep, render_value, Money,
    OutputFormat, SurplusReport,
};
use crate::schedule::{build_schedule, chord_gap, rate_sweep, trade_surplus, ComparisonReport};
use crate::valuation::{
    delayed_present_cost, intrinsic_value, present_cost, Age, AssetSpec, DiscountRate,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_PARTIAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "intrinsic",
    version,
    about = "Time-value-of-money asset valuation and depreciation schedules"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    pub format: FormatArg,

    /// Omit the timestamp from JSON reports so identical runs match byte for byte.
    #[arg(long, global = true)]
    pub deterministic: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, Args)]
pub struct AssetArgs {
    /// Replacement cost, a positive amount.
    #[arg(long, value_parser = parse_cost)]
    pub cost: f64,

    /// Lifetime in periods.
    #[arg(long, value_parser = parse_life)]
    pub life: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Intrinsic value at a given age.
    Value {
        #[command(flatten)]
        asset: AssetArgs,
        /// Cost of capital per period, e.g. 0.2 or 20%.
        #[arg(long, value_parser = parse_rate, allow_negative_numbers = true)]
        rate: DiscountRate,
        #[arg(long, value_parser = parse_age, default_value = "0", allow_negative_numbers = true)]
        age: Age,
        /// Also report the present and delayed cost of ownership.
        #[arg(long)]
        detail: bool,
    },
    /// Per-period depreciation schedule for one method.
    Schedule {
        #[command(flatten)]
        asset: AssetArgs,
        #[arg(long, value_parser = parse_rate, allow_negative_numbers = true)]
        rate: Option<DiscountRate>,
        /// intrinsic, sl, ddb or syd.
        #[arg(long, value_parser = parse_method)]
        method: Method,
    },
    /// Book values of several methods side by side.
    Compare {
        #[command(flatten)]
        asset: AssetArgs,
        #[arg(long, value_parser = parse_rate, allow_negative_numbers = true)]
        rate: Option<DiscountRate>,
        /// Comma-separated list of intrinsic, sl, ddb, syd.
        #[arg(long, value_parser = parse_method, value_delimiter = ',', required = true)]
        methods: Vec<Method>,
    },
    /// Intrinsic value by age across several costs of capital.
    Sweep {
        #[command(flatten)]
        asset: AssetArgs,
        /// Comma-separated costs of capital.
        #[arg(
            long,
            value_parser = parse_rate,
            value_delimiter = ',',
            required = true,
            allow_negative_numbers = true
        )]
        rates: Vec<DiscountRate>,
    },
    /// Value every asset in a CSV or JSON registry.
    Batch {
        /// Registry file, `.csv` or `.json`.
        #[arg(long)]
        input: PathBuf,
        /// Report destination; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Valuation gap between a buyer and a seller with different costs of capital.
    Surplus {
        #[command(flatten)]
        asset: AssetArgs,
        #[arg(long, value_parser = parse_age, allow_negative_numbers = true)]
        age: Age,
        #[arg(long, value_parser = parse_rate, allow_negative_numbers = true)]
        seller_rate: DiscountRate,
        #[arg(long, value_parser = parse_rate, allow_negative_numbers = true)]
        buyer_rate: DiscountRate,
    },
}

fn parse_positive(s: &str, what: &str) -> Result<f64, String> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a number"))?;
    if !x.is_finite() || x <= 0.0 {
        return Err(format!("{what} must be positive and finite"));
    }
    Ok(x)
}

fn parse_cost(s: &str) -> Result<f64, String> {
    parse_positive(s, "cost")
}

fn parse_life(s: &str) -> Result<f64, String> {
    parse_positive(s, "lifetime")
}

fn parse_age(s: &str) -> Result<Age, String> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a number"))?;
    Age::new(x).map_err(|e| e.to_string())
}

fn parse_rate(s: &str) -> Result<DiscountRate, String> {
    s.parse().map_err(|e: ValuationError| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: ValuationError| e.to_string())
}

/// A failure tied to the flag that caused it, or an internal fault.
#[derive(Debug)]
enum Failure {
    Invalid { flag: &'static str, message: String },
    Internal(String),
}

impl Failure {
    fn flag(flag: &'static str) -> impl FnOnce(ValuationError) -> Failure {
        move |e| Failure::Invalid {
            flag,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(String, i32), Failure>;

/// Parses `args` (program name first), runs the command and writes the report
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = writeln!(err, "{}", one_line(&e.to_string()));
            return EXIT_INVALID;
        }
    };

    match execute(&cli, err) {
        Ok((report, code)) => {
            if out
                .write_all(report.as_bytes())
                .and_then(|()| out.flush())
                .is_err()
            {
                return EXIT_INTERNAL;
            }
            code
        }
        Err(Failure::Invalid { flag, message }) => {
            let _ = writeln!(err, "error: {flag}: {message}");
            EXIT_INVALID
        }
        Err(Failure::Internal(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INTERNAL
        }
    }
}

/// Collapses a clap diagnostic to the text before its usage block.
fn one_line(message: &str) -> String {
    message
        .lines()
        .take_while(|l| !l.starts_with("Usage:"))
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with("For more information"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn asset_of(args: &AssetArgs) -> Result<AssetSpec, Failure> {
    AssetSpec::new(args.cost, args.life).map_err(Failure::flag("--cost"))
}

fn whole_life(asset: &AssetSpec) -> Result<u32, Failure> {
    asset.whole_lifetime().map_err(Failure::flag("--life"))
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Outcome {
    let format = OutputFormat::from(cli.format);
    let det = cli.deterministic;
    match &cli.command {
        Command::Value {
            asset,
            rate,
            age,
            detail,
        } => {
            let asset = asset_of(asset)?;
            asset.check_age(*age).map_err(Failure::flag("--age"))?;
            let mut valuations =
                vec![intrinsic_value(&asset, *rate, *age).map_err(Failure::flag("--rate"))?];
            if *detail {
                valuations.push(present_cost(&asset, *rate).map_err(Failure::flag("--rate"))?);
                valuations.push(
                    delayed_present_cost(&asset, *rate, *age).map_err(Failure::flag("--rate"))?,
                );
            }
            Ok((
                render_value(format, &asset, *rate, &valuations, det),
                EXIT_OK,
            ))
        }
        Command::Schedule {
            asset,
            rate,
            method,
        } => {
            let asset = asset_of(asset)?;
            whole_life(&asset)?;
            let schedule =
                build_schedule(&asset, *method, *rate).map_err(Failure::flag("--rate"))?;
            Ok((render_schedule(format, &schedule, det), EXIT_OK))
        }
        Command::Compare {
            asset,
            rate,
            methods,
        } => {
            let asset = asset_of(asset)?;
            whole_life(&asset)?;
            let schedules = methods
                .iter()
                .map(|&m| build_schedule(&asset, m, *rate))
                .collect::<Result<Vec<_>, _>>()
                .map_err(Failure::flag("--rate"))?;
            let report = ComparisonReport { asset, schedules };
            Ok((render_comparison(format, &report, *rate, det), EXIT_OK))
        }
        Command::Sweep { asset, rates } => {
            let asset = asset_of(asset)?;
            whole_life(&asset)?;
            let sweep = rate_sweep(&asset, rates).map_err(Failure::flag("--rates"))?;
            let gaps = rates
                .iter()
                .map(|&r| chord_gap(&asset, r))
                .collect::<Result<Vec<_>, _>>()
                .map_err(Failure::flag("--rates"))?;
            Ok((render_sweep(format, &sweep, &gaps, det), EXIT_OK))
        }
        Command::Surplus {
            asset,
            age,
            seller_rate,
            buyer_rate,
        } => {
            let asset = asset_of(asset)?;
            asset.check_age(*age).map_err(Failure::flag("--age"))?;
            let value = |r| {
                intrinsic_value(&asset, r, *age)
                    .map(|v| v.amount)
                    .map_err(|e| Failure::Internal(e.to_string()))
            };
            let report = SurplusReport {
                asset,
                age: *age,
                seller_rate: *seller_rate,
                buyer_rate: *buyer_rate,
                seller_value: Money(value(*seller_rate)?),
                buyer_value: Money(value(*buyer_rate)?),
                surplus: Money(
                    trade_surplus(&asset, *age, *seller_rate, *buyer_rate)
                        .map_err(|e| Failure::Internal(e.to_string()))?,
                ),
            };
            Ok((render_surplus(format, &report, det), EXIT_OK))
        }
        Command::Batch { input, output } => {
            let records = read_registry(input).map_err(|e| Failure::Invalid {
                flag: "--input",
                message: e.to_string(),
            })?;
            let report = run_batch(&records);
            for e in &report.errors {
                let _ = writeln!(err, "error: record {}: {}", e.id, e.reason);
            }
            let code = if report.is_clean() {
                EXIT_OK
            } else {
                EXIT_PARTIAL
            };
            let rendered = render_batch(format, &report, det);
            match output {
                Some(path) => {
                    fs::write(path, rendered).map_err(|e| {
                        Failure::Internal(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Ok((String::new(), code))
                }
                None => Ok((rendered, code)),
            }
        }
    }
}
