//! Result documents and their json / csv / table renderings.

use std::fmt::Display;
use std::str::FromStr;
use std::time::Duration;

use anyhow::Result;
use clap::ValueEnum;
use serde_json::{json, Map, Number, Value};
use stratakit::homology::HHProfile;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

/// An exact integer as a JSON number, whatever its size.
pub fn int(value: impl Display) -> Value {
    Value::Number(Number::from_str(&value.to_string()).expect("integers are valid JSON numbers"))
}

/// `[[degree, dim], ...]` in increasing degree; zero dimensions are absent.
pub fn profile_value(profile: &HHProfile) -> Value {
    Value::Array(profile.entries().map(|(p, d)| json!([p, d])).collect())
}

/// Flat rows for csv and table output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.header)?;
        for row in &self.rows {
            writer.write_record(row)?;
        }
        Ok(String::from_utf8(writer.into_inner()?)?)
    }

    pub fn to_text(&self) -> String {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].chars().count())
                    .chain([self.header[c].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = line(&self.header);
        out.push('\n');
        out.push_str(&line(
            &widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>(),
        ));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }
}

/// Outcome of one compute subcommand.
pub struct Output {
    pub input: Value,
    pub computation: String,
    pub parameters: Value,
    pub result: Value,
    pub table: Table,
}

impl Output {
    pub fn document(&self, elapsed: Duration) -> Value {
        let mut doc = Map::new();
        doc.insert("input".into(), self.input.clone());
        doc.insert(
            "computation".into(),
            json!({ "name": self.computation, "parameters": self.parameters }),
        );
        doc.insert("result".into(), self.result.clone());
        doc.insert(
            "meta".into(),
            json!({
                "tool": "stratakit",
                "version": env!("CARGO_PKG_VERSION"),
                "elapsed_ms": int(elapsed.as_millis()),
            }),
        );
        Value::Object(doc)
    }

    pub fn render(&self, format: Format, elapsed: Duration) -> Result<String> {
        Ok(match format {
            Format::Json => {
                let mut text = serde_json::to_string_pretty(&self.document(elapsed))?;
                text.push('\n');
                text
            }
            Format::Csv => self.table.to_csv()?,
            Format::Table => self.table.to_text(),
        })
    }
}
