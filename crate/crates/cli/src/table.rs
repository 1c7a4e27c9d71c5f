use std::io::Write;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::config::{Format, RunConfig};
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
    Null,
}

impl Cell {
    /// 12 significant digits.
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) if v.is_nan() => "nan".into(),
            Cell::Float(v) if v.is_infinite() => if *v > 0.0 { "inf" } else { "-inf" }.into(),
            Cell::Float(v) => format!("{v:.11e}"),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Null => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Float(v) if v.is_finite() => json!(v),
            Cell::Float(v) if v.is_nan() => Value::Null,
            Cell::Float(v) => json!(if *v > 0.0 { "inf" } else { "-inf" }),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::Null => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.into())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Null, Into::into)
    }
}

/// Log-log growth fit reported next to a table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitRow {
    pub quantity: String,
    pub against: String,
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub fits: Vec<FitRow>,
    pub notes: Vec<String>,
}

pub const STATUS: &str = "status";

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            ..Self::default()
        }
    }

    /// Rows whose status column is not "ok".
    pub fn failed_rows(&self) -> usize {
        let Some(idx) = self.columns.iter().position(|c| *c == STATUS) else {
            return 0;
        };
        self.rows
            .iter()
            .filter(|r| !matches!(&r[idx], Cell::Text(s) if s == "ok"))
            .count()
    }

    pub fn all_failed(&self) -> bool {
        !self.rows.is_empty() && self.failed_rows() == self.rows.len()
    }
}

/// Run metadata written into headers.
pub struct Meta<'a> {
    pub command: &'a str,
    pub config: &'a RunConfig,
    pub reproducible: bool,
}

fn timestamp() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

pub fn render(table: &Table, meta: &Meta, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Csv => render_csv(table, meta),
        Format::Json => render_json(table, meta),
    }
}

fn render_csv(table: &Table, meta: &Meta) -> Result<Vec<u8>, CliError> {
    let mut out = Vec::new();
    let echo = serde_json::to_string(&meta.config.echo()).expect("config serializes");
    let mut head = vec![
        format!("etrans {}", env!("CARGO_PKG_VERSION")),
        format!("command: {}", meta.command),
    ];
    if !meta.reproducible {
        head.push(format!("generated_unix: {}", timestamp()));
    }
    head.push(format!("config: {echo}"));
    head.extend(table.notes.iter().map(|n| format!("note: {n}")));
    for f in &table.fits {
        head.push(format!(
            "fit: quantity={} against={} slope={:.11e} intercept={:.11e} r_squared={:.11e} samples={}",
            f.quantity, f.against, f.slope, f.intercept, f.r_squared, f.samples
        ));
    }
    for line in head {
        writeln!(out, "# {line}").expect("write to memory");
    }
    let mut w = csv::Writer::from_writer(out);
    let fail = |e: csv::Error| CliError::io(e.to_string());
    w.write_record(&table.columns).map_err(fail)?;
    for row in &table.rows {
        w.write_record(row.iter().map(Cell::csv)).map_err(fail)?;
    }
    w.into_inner().map_err(|e| CliError::io(e.to_string()))
}

fn render_json(table: &Table, meta: &Meta) -> Result<Vec<u8>, CliError> {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let obj: Map<String, Value> = table
                .columns
                .iter()
                .zip(row)
                .map(|(c, v)| (c.to_string(), v.json()))
                .collect();
            Value::Object(obj)
        })
        .collect();
    let mut diagnostics = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "command": meta.command,
        "notes": table.notes,
        "failed_rows": table.failed_rows(),
    });
    if !meta.reproducible {
        diagnostics["generated_unix"] = json!(timestamp());
    }
    let doc = json!({
        "config": meta.config.echo(),
        "rows": rows,
        "fits": table.fits,
        "diagnostics": diagnostics,
    });
    let mut out = serde_json::to_vec_pretty(&doc).map_err(|e| CliError::io(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}
