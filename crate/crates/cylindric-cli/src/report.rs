//! Report rows and their rendering as JSON, CSV or plain text.

use std::collections::BTreeSet;
use std::io::Write;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Csv,
    Text,
}

pub type Row = Map<String, Value>;

/// The result of one command: rows for machine output, optional plain text
/// lines, and whether a mathematical check failed.
#[derive(Debug, Default)]
pub struct Report {
    pub rows: Vec<Row>,
    pub text: Option<Vec<String>>,
    pub failed: bool,
}

impl Report {
    pub fn new(rows: Vec<Row>) -> Self {
        Report { rows, text: None, failed: false }
    }

    pub fn with_text(mut self, lines: Vec<String>) -> Self {
        self.text = Some(lines);
        self
    }

    pub fn write(&self, format: Output, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Output::Json => {
                let body = serde_json::to_string_pretty(&self.rows).expect("rows serialize");
                writeln!(out, "{body}")
            }
            Output::Csv => {
                let mut columns = BTreeSet::new();
                for r in &self.rows {
                    columns.extend(r.keys().cloned());
                }
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&columns)?;
                for r in &self.rows {
                    w.write_record(columns.iter().map(|c| r.get(c).map(cell).unwrap_or_default()))?;
                }
                w.flush()
            }
            Output::Text => match &self.text {
                Some(lines) => lines.iter().try_for_each(|l| writeln!(out, "{l}")),
                None => self.rows.iter().try_for_each(|r| {
                    let fields: Vec<String> = r.iter().map(|(k, v)| format!("{k}={}", cell(v))).collect();
                    writeln!(out, "{}", fields.join(" "))
                }),
            },
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Builds a row from `(key, value)` pairs.
#[macro_export]
macro_rules! row {
    ($($k:expr => $v:expr),* $(,)?) => {{
        let mut m = serde_json::Map::new();
        $(m.insert($k.to_string(), serde_json::json!($v));)*
        m
    }};
}
