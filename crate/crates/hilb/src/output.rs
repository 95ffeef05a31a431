//! The output record and its three renderings.
//!
//! Every command produces one [`OutputRecord`]. JSON serializes the whole
//! record as a single document with keys in sorted order; CSV writes only
//! the payload; the table format is for people.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Bool(bool),
    Text(String),
}

impl Value {
    pub fn int(v: impl Into<BigInt>) -> Self {
        Value::Int(v.into())
    }

    pub fn text(v: impl fmt::Display) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(i) => write!(f, "{i}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

impl Serialize for Value {
    /// Integers that fit in `i64` become JSON numbers, larger ones decimal strings.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Int(i) => match i64::try_from(i) {
                Ok(small) => s.serialize_i64(small),
                Err(_) => s.serialize_str(&i.to_string()),
            },
            Value::Bool(b) => s.serialize_bool(*b),
            Value::Text(t) => s.serialize_str(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Section {
    pub columns: Vec<String>,
    pub name: String,
    pub rows: Vec<Vec<Value>>,
}

impl Section {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Section {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            name: name.to_string(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width in section {}", self.name);
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Payload {
    pub sections: Vec<Section>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub payload: Payload,
    pub version: String,
    /// Whether every check carried by the record passed.
    #[serde(skip)]
    pub ok: bool,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            payload: Payload { sections: Vec::new() },
            version: env!("CARGO_PKG_VERSION").to_string(),
            ok: true,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn section(mut self, section: Section) -> Self {
        self.payload.sections.push(section);
        self
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            Format::Table => self.render_table(out),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)?;
                Ok(())
            }
            Format::Csv => self.render_csv(out),
        }
    }

    fn render_table(&self, out: &mut dyn Write) -> Result<(), CliError> {
        write!(out, "# hilb {}", self.command)?;
        for (k, v) in &self.parameters {
            write!(out, " {k}={v}")?;
        }
        writeln!(out)?;
        let named = self.payload.sections.len() > 1;
        for (i, section) in self.payload.sections.iter().enumerate() {
            if i > 0 {
                writeln!(out)?;
            }
            if named {
                writeln!(out, "[{}]", section.name)?;
            }
            let cells: Vec<Vec<String>> =
                section.rows.iter().map(|r| r.iter().map(Value::to_string).collect()).collect();
            let mut widths: Vec<usize> = section.columns.iter().map(|c| c.chars().count()).collect();
            for row in &cells {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            write_aligned(out, &section.columns, &widths)?;
            for row in &cells {
                write_aligned(out, row, &widths)?;
            }
        }
        Ok(())
    }

    fn render_csv(&self, out: &mut dyn Write) -> Result<(), CliError> {
        for (i, section) in self.payload.sections.iter().enumerate() {
            if i > 0 {
                writeln!(out)?;
            }
            let mut writer = csv::Writer::from_writer(&mut *out);
            writer.write_record(&section.columns)?;
            for row in &section.rows {
                writer.write_record(row.iter().map(Value::to_string))?;
            }
            writer.flush()?;
        }
        Ok(())
    }
}

fn write_aligned(out: &mut dyn Write, cells: &[String], widths: &[usize]) -> std::io::Result<()> {
    let last = cells.len().saturating_sub(1);
    for (i, (cell, &w)) in cells.iter().zip(widths).enumerate() {
        if i == last {
            write!(out, "{cell}")?;
        } else {
            write!(out, "{cell:<w$}  ")?;
        }
    }
    writeln!(out)
}
