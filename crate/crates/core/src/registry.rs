//! Asset registries for batch valuation.
//!
//! A registry is either CSV with header `id,cost,lifetime,rate,age` (the `age`
//! column may be omitted or left blank) or a JSON array of objects with the
//! same keys. Numeric fields in JSON may be numbers or strings; rates accept
//! the `20%` spelling in both formats.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::classic::Method;
use crate::report::{money, render, row_entries, Envelope, Money, OutputFormat, RowEntry};
use crate::schedule::{build_schedule, Schedule};
use crate::valuation::{intrinsic_value, Age, AssetSpec, DiscountRate};

/// Failure to read a registry as a whole, as opposed to a bad record in it.
#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed CSV registry: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed JSON registry: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported registry extension for {0} (expected .csv or .json)")]
    UnknownFormat(String),
}

/// A registry row before validation; every field is kept as text.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
pub struct RawRecord {
    pub id: String,
    pub cost: String,
    pub lifetime: String,
    pub rate: String,
    #[serde(default)]
    pub age: Option<String>,
}

/// A validated registry entry.
#[derive(Debug, Clone, PartialEq)]
pub struct AssetRecord {
    pub id: String,
    pub asset: AssetSpec,
    pub rate: DiscountRate,
    pub age: Age,
}

pub fn read_registry(path: &Path) -> Result<Vec<RawRecord>, RegistryError> {
    let text = fs::read_to_string(path).map_err(|source| RegistryError::Io {
        path: path.display().to_string(),
        source,
    })?;
    match path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase)
        .as_deref()
    {
        Some("csv") => parse_csv(&text),
        Some("json") => parse_json(&text),
        _ => Err(RegistryError::UnknownFormat(path.display().to_string())),
    }
}

pub fn parse_csv(text: &str) -> Result<Vec<RawRecord>, RegistryError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    reader
        .deserialize()
        .collect::<Result<Vec<RawRecord>, _>>()
        .map_err(RegistryError::from)
}

pub fn parse_json(text: &str) -> Result<Vec<RawRecord>, RegistryError> {
    let rows: Vec<serde_json::Map<String, Value>> = serde_json::from_str(text)?;
    Ok(rows
        .iter()
        .map(|row| {
            let field = |key: &str| match row.get(key) {
                Some(Value::String(s)) => s.clone(),
                Some(Value::Number(n)) => n.to_string(),
                Some(Value::Null) | None => String::new(),
                Some(other) => other.to_string(),
            };
            let age = field("age");
            RawRecord {
                id: field("id"),
                cost: field("cost"),
                lifetime: field("lifetime"),
                rate: field("rate"),
                age: (!age.is_empty()).then_some(age),
            }
        })
        .collect())
}

fn number(field: &str, text: &str) -> Result<f64, String> {
    text.trim()
        .parse::<f64>()
        .map_err(|_| format!("{field}: `{text}` is not a number"))
}

impl RawRecord {
    pub fn validate(&self) -> Result<AssetRecord, String> {
        let id = self.id.trim();
        if id.is_empty() {
            return Err("id: must not be empty".into());
        }
        let cost = number("cost", &self.cost)?;
        let lifetime = number("lifetime", &self.lifetime)?;
        let asset = AssetSpec::new(cost, lifetime).map_err(|e| e.to_string())?;
        asset
            .whole_lifetime()
            .map_err(|e| format!("lifetime: {e}"))?;
        let rate: DiscountRate = self.rate.parse().map_err(|e| format!("rate: {e}"))?;
        let age = match self.age.as_deref().map(str::trim) {
            None | Some("") => Age::NEW,
            Some(text) => Age::new(number("age", text)?).map_err(|e| format!("age: {e}"))?,
        };
        asset.check_age(age).map_err(|e| format!("age: {e}"))?;
        Ok(AssetRecord {
            id: id.to_owned(),
            asset,
            rate,
            age,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BatchEntry {
    pub id: String,
    pub asset: AssetSpec,
    pub rate: DiscountRate,
    pub age: Age,
    pub intrinsic_value: Money,
    pub schedule: Vec<RowEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BatchError {
    pub id: String,
    pub reason: String,
}

#[derive(Debug, Default, Serialize)]
pub struct BatchReport {
    pub entries: Vec<BatchEntry>,
    pub errors: Vec<BatchError>,
}

impl BatchReport {
    pub fn is_clean(&self) -> bool {
        self.errors.is_empty()
    }
}

fn value_record(record: &AssetRecord) -> Result<(f64, Schedule), String> {
    let value =
        intrinsic_value(&record.asset, record.rate, record.age).map_err(|e| e.to_string())?;
    let schedule = build_schedule(&record.asset, Method::Intrinsic, Some(record.rate))
        .map_err(|e| e.to_string())?;
    Ok((value.amount, schedule))
}

/// Values every record in input order. Invalid or duplicate records land in
/// `errors`; the rest are still processed.
pub fn run_batch(records: &[RawRecord]) -> BatchReport {
    let mut seen = HashSet::new();
    let mut report = BatchReport::default();
    for (index, raw) in records.iter().enumerate() {
        let label = if raw.id.trim().is_empty() {
            format!("#{}", index + 1)
        } else {
            raw.id.trim().to_owned()
        };
        let outcome = raw.validate().and_then(|record| {
            if !seen.insert(record.id.clone()) {
                return Err(format!("id: duplicate `{}`", record.id));
            }
            value_record(&record).map(|v| (record, v))
        });
        match outcome {
            Ok((record, (value, schedule))) => report.entries.push(BatchEntry {
                schedule: row_entries(&schedule),
                id: record.id,
                asset: record.asset,
                rate: record.rate,
                age: record.age,
                intrinsic_value: Money(value),
            }),
            Err(reason) => report.errors.push(BatchError { id: label, reason }),
        }
    }
    report
}

/// JSON keeps both `entries` and `errors`. CSV and table list one line per
/// schedule period (`id,age,intrinsic_value,period,expense,book_value`); their
/// errors are left for the caller to report.
pub fn render_batch(format: OutputFormat, report: &BatchReport, deterministic: bool) -> String {
    if format == OutputFormat::Json {
        return Envelope::new("batch", report, deterministic).to_json();
    }
    let header: Vec<String> = [
        "id",
        "age",
        "intrinsic_value",
        "period",
        "expense",
        "book_value",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let rows: Vec<Vec<String>> = report
        .entries
        .iter()
        .flat_map(|e| {
            e.schedule.iter().map(move |r| {
                vec![
                    e.id.clone(),
                    e.age.value().to_string(),
                    money(e.intrinsic_value.0),
                    r.period.to_string(),
                    money(r.expense.0),
                    money(r.book_value.0),
                ]
            })
        })
        .collect();
    render(format, header, rows)
}
