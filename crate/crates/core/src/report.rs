//! Rendering of valuations, schedules and sweeps as tables, CSV and JSON.
//!
//! Every monetary figure is printed with exactly four decimals, rounded half
//! to even on the exact binary value. JSON carries those figures as numbers
//! with the same four decimals.

use std::fmt::Write as _;

use serde::ser::{Error as _, SerializeMap};
use serde::{Serialize, Serializer};

use crate::classic::Method;
use crate::schedule::{ComparisonReport, Schedule, SweepReport};
use crate::valuation::{Age, AssetSpec, DiscountRate, Valuation, ValuationKind};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

/// Formats a money amount with four decimals, half-even. Never prints `-0.0000`.
pub fn money(x: f64) -> String {
    let s = format!("{x:.4}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_owned(),
        _ => s,
    }
}

/// Money amount that serializes as a JSON number with four decimals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Money(pub f64);

impl Serialize for Money {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = money(self.0).parse().map_err(S::Error::custom)?;
        n.serialize(serializer)
    }
}

fn age_label(age: Age) -> String {
    format!("{}", age.value())
}

/// JSON wrapper shared by every command.
#[derive(Debug, Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub tool_version: &'static str,
    pub command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<String>,
    pub payload: T,
}

impl<'a, T: Serialize> Envelope<'a, T> {
    /// `deterministic` drops the timestamp so repeated runs are byte-identical.
    pub fn new(command: &'a str, payload: T, deterministic: bool) -> Self {
        let generated_at = (!deterministic)
            .then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
        Envelope {
            tool_version: TOOL_VERSION,
            command,
            generated_at,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report payloads serialize");
        s.push('\n');
        s
    }
}

pub(crate) fn csv_document(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// Space-aligned text table, first column left-aligned and the rest right-aligned.
pub fn text_table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let mut first = true;
        for (cell, w) in cells.iter().zip(&widths) {
            if first {
                let _ = write!(out, "{cell:<w$}");
                first = false;
            } else {
                let _ = write!(out, "  {cell:>w$}");
            }
        }
        out.push('\n');
    };
    line(header);
    for row in rows {
        line(row);
    }
    out
}

pub(crate) fn render(format: OutputFormat, header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    match format {
        OutputFormat::Csv => csv_document(&header, &rows),
        _ => text_table(&header, &rows),
    }
}

fn strings<const N: usize>(cells: [&str; N]) -> Vec<String> {
    cells.iter().map(|s| s.to_string()).collect()
}

// ---------------------------------------------------------------------------
// value
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct ValuationEntry {
    pub kind: ValuationKind,
    pub age: Age,
    pub amount: Money,
}

impl From<Valuation> for ValuationEntry {
    fn from(v: Valuation) -> Self {
        ValuationEntry {
            kind: v.kind,
            age: v.age,
            amount: Money(v.amount),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ValuePayload {
    pub asset: AssetSpec,
    pub rate: DiscountRate,
    pub valuations: Vec<ValuationEntry>,
}

fn kind_label(kind: ValuationKind) -> &'static str {
    match kind {
        ValuationKind::PresentCost => "present_cost",
        ValuationKind::DelayedCost => "delayed_cost",
        ValuationKind::IntrinsicValue => "intrinsic_value",
    }
}

/// Intrinsic value first; present and delayed cost follow when present.
pub fn render_value(
    format: OutputFormat,
    asset: &AssetSpec,
    rate: DiscountRate,
    valuations: &[Valuation],
    deterministic: bool,
) -> String {
    match format {
        OutputFormat::Json => {
            let payload = ValuePayload {
                asset: *asset,
                rate,
                valuations: valuations.iter().copied().map(Into::into).collect(),
            };
            Envelope::new("value", payload, deterministic).to_json()
        }
        OutputFormat::Table if valuations.len() == 1 => {
            format!("{}\n", money(valuations[0].amount))
        }
        _ => {
            let rows = valuations
                .iter()
                .map(|v| {
                    vec![
                        kind_label(v.kind).to_owned(),
                        age_label(v.age),
                        money(v.amount),
                    ]
                })
                .collect();
            render(format, strings(["kind", "age", "amount"]), rows)
        }
    }
}

// ---------------------------------------------------------------------------
// schedule
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct RowEntry {
    pub period: u32,
    pub expense: Money,
    pub book_value: Money,
}

#[derive(Debug, Serialize)]
pub struct SchedulePayload {
    pub asset: AssetSpec,
    pub method: Method,
    pub rate: Option<DiscountRate>,
    pub rows: Vec<RowEntry>,
}

pub(crate) fn row_entries(schedule: &Schedule) -> Vec<RowEntry> {
    schedule
        .rows
        .iter()
        .map(|r| RowEntry {
            period: r.period,
            expense: Money(r.expense),
            book_value: Money(r.book_value),
        })
        .collect()
}

impl From<&Schedule> for SchedulePayload {
    fn from(s: &Schedule) -> Self {
        SchedulePayload {
            asset: s.asset,
            method: s.method,
            rate: s.rate,
            rows: row_entries(s),
        }
    }
}

/// Columns `period,expense,book_value`.
pub fn render_schedule(format: OutputFormat, schedule: &Schedule, deterministic: bool) -> String {
    if format == OutputFormat::Json {
        return Envelope::new("schedule", SchedulePayload::from(schedule), deterministic).to_json();
    }
    let rows = schedule
        .rows
        .iter()
        .map(|r| vec![r.period.to_string(), money(r.expense), money(r.book_value)])
        .collect();
    render(format, strings(["period", "expense", "book_value"]), rows)
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

/// A JSON object whose keys keep insertion order.
struct OrderedRow<'a> {
    key: &'static str,
    key_value: u32,
    columns: &'a [String],
    values: Vec<Money>,
}

impl Serialize for OrderedRow<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.columns.len() + 1))?;
        map.serialize_entry(self.key, &self.key_value)?;
        for (c, v) in self.columns.iter().zip(&self.values) {
            map.serialize_entry(c, v)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct ComparePayload<'a> {
    asset: AssetSpec,
    rate: Option<DiscountRate>,
    methods: &'a [String],
    rows: Vec<OrderedRow<'a>>,
}

/// Wide book-value table: `period,<method>...`, one row per period.
pub fn render_comparison(
    format: OutputFormat,
    report: &ComparisonReport,
    rate: Option<DiscountRate>,
    deterministic: bool,
) -> String {
    let columns: Vec<String> = report
        .schedules
        .iter()
        .map(|s| s.method.token().to_owned())
        .collect();
    let periods = report.periods() as u32;
    let book = |period: u32| -> Vec<f64> {
        report
            .schedules
            .iter()
            .map(|s| s.book_value(period).unwrap_or(f64::NAN))
            .collect()
    };

    if format == OutputFormat::Json {
        let rows = (1..=periods)
            .map(|p| OrderedRow {
                key: "period",
                key_value: p,
                columns: &columns,
                values: book(p).into_iter().map(Money).collect(),
            })
            .collect();
        let payload = ComparePayload {
            asset: report.asset,
            rate,
            methods: &columns,
            rows,
        };
        return Envelope::new("compare", payload, deterministic).to_json();
    }

    let mut header = vec!["period".to_owned()];
    header.extend(columns.iter().cloned());
    let rows = (1..=periods)
        .map(|p| {
            let mut row = vec![p.to_string()];
            row.extend(book(p).into_iter().map(money));
            row
        })
        .collect();
    render(format, header, rows)
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct GapRow<'a> {
    columns: &'a [String],
    gaps: &'a [f64],
}

impl Serialize for GapRow<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.columns.len()))?;
        for (c, g) in self.columns.iter().zip(self.gaps) {
            map.serialize_entry(c, &Money(*g))?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct SweepPayload<'a> {
    asset: AssetSpec,
    rates: &'a [DiscountRate],
    rows: Vec<OrderedRow<'a>>,
    chord_gap: GapRow<'a>,
}

/// Value matrix `age,<rate>...` over ages `0..=lifetime`, followed by a
/// `chord_gap` row with one entry per rate.
pub fn render_sweep(
    format: OutputFormat,
    sweep: &SweepReport,
    gaps: &[f64],
    deterministic: bool,
) -> String {
    let columns: Vec<String> = sweep.rates.iter().map(ToString::to_string).collect();
    let ages = sweep.values.first().map_or(0, Vec::len) as u32;
    let at = |age: u32| sweep.values.iter().map(move |v| v[age as usize]);

    if format == OutputFormat::Json {
        let rows = (0..ages)
            .map(|a| OrderedRow {
                key: "age",
                key_value: a,
                columns: &columns,
                values: at(a).map(Money).collect(),
            })
            .collect();
        let payload = SweepPayload {
            asset: sweep.asset,
            rates: &sweep.rates,
            rows,
            chord_gap: GapRow {
                columns: &columns,
                gaps,
            },
        };
        return Envelope::new("sweep", payload, deterministic).to_json();
    }

    let mut header = vec!["age".to_owned()];
    header.extend(columns.iter().cloned());
    let mut rows: Vec<Vec<String>> = (0..ages)
        .map(|a| {
            let mut row = vec![a.to_string()];
            row.extend(at(a).map(money));
            row
        })
        .collect();
    let mut gap_row = vec!["chord_gap".to_owned()];
    gap_row.extend(gaps.iter().copied().map(money));
    rows.push(gap_row);
    render(format, header, rows)
}

// ---------------------------------------------------------------------------
// surplus
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct SurplusReport {
    pub asset: AssetSpec,
    pub age: Age,
    pub seller_rate: DiscountRate,
    pub buyer_rate: DiscountRate,
    pub seller_value: Money,
    pub buyer_value: Money,
    pub surplus: Money,
}

pub fn render_surplus(format: OutputFormat, report: &SurplusReport, deterministic: bool) -> String {
    match format {
        OutputFormat::Json => Envelope::new("surplus", report, deterministic).to_json(),
        OutputFormat::Csv => csv_document(
            &strings([
                "age",
                "seller_rate",
                "buyer_rate",
                "seller_value",
                "buyer_value",
                "surplus",
            ]),
            &[vec![
                age_label(report.age),
                report.seller_rate.to_string(),
                report.buyer_rate.to_string(),
                money(report.seller_value.0),
                money(report.buyer_value.0),
                money(report.surplus.0),
            ]],
        ),
        OutputFormat::Table => text_table(
            &strings(["quantity", "amount"]),
            &[
                vec!["buyer_value".into(), money(report.buyer_value.0)],
                vec!["seller_value".into(), money(report.seller_value.0)],
                vec!["surplus".into(), money(report.surplus.0)],
            ],
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schedule::build_schedule;

    #[test]
    fn money_rounds_half_even_with_four_places() {
        assert_eq!(money(71.332_905_238), "71.3329");
        assert_eq!(money(100.0), "100.0000");
        assert_eq!(money(-10.0), "-10.0000");
        // exact binary ties
        assert_eq!(money(0.031_25), "0.0312");
        assert_eq!(money(0.093_75), "0.0938");
        assert_eq!(money(-0.000_01), "0.0000");
        assert_eq!(money(-0.0), "0.0000");
        assert_eq!(money(10.737_418_240_000_006), "10.7374");
    }

    #[test]
    fn money_serializes_as_number_with_four_places() {
        let json = serde_json::to_string(&[Money(100.0), Money(-3.852_275)]).unwrap();
        assert_eq!(json, "[100.0000,-3.8523]");
    }

    #[test]
    fn schedule_csv_layout() {
        let asset = AssetSpec::new(100.0, 3.0).unwrap();
        let s = build_schedule(&asset, Method::StraightLine, None).unwrap();
        let out = render_schedule(OutputFormat::Csv, &s, true);
        assert_eq!(
            out,
            "period,expense,book_value\n1,-33.3333,66.6667\n2,-33.3333,33.3333\n3,-33.3333,0.0000\n"
        );
    }

    #[test]
    fn envelope_omits_timestamp_when_deterministic() {
        let e = Envelope::new("value", 1, true).to_json();
        assert!(!e.contains("generated_at"));
        let e = Envelope::new("value", 1, false).to_json();
        assert!(e.contains("generated_at"));
    }

    #[test]
    fn table_aligns_columns() {
        let t = text_table(
            &strings(["period", "x"]),
            &[strings(["1", "10.0000"]), strings(["10", "-1.0000"])],
        );
        assert_eq!(t, "period        x\n1       10.0000\n10      -1.0000\n");
    }
}
