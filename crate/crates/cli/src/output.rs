use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use serde_json::{json, Map, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub struct OutputSpec {
    pub format: Format,
    pub destination: Option<PathBuf>,
    pub precision: usize,
}

impl OutputSpec {
    pub fn new(format: Format, destination: Option<PathBuf>, precision: usize) -> Result<Self, CliError> {
        if !(6..=17).contains(&precision) {
            return Err(CliError::usage(format!("precision must be in [6, 17], got {precision}")));
        }
        Ok(Self {
            format,
            destination,
            precision,
        })
    }

    /// `precision` significant digits in scientific notation.
    pub fn num(&self, v: f64) -> String {
        if v.is_finite() {
            format!("{:.*e}", self.precision - 1, v)
        } else {
            v.to_string()
        }
    }

    /// JSON number rounded to `precision` significant digits.
    pub fn json_num(&self, v: f64) -> Value {
        if !v.is_finite() {
            return Value::Null;
        }
        let rounded: f64 = self.num(v).parse().expect("formatted float parses");
        json!(rounded)
    }

    pub fn emit(&self, text: &str) -> Result<(), CliError> {
        match &self.destination {
            Some(path) => fs::write(path, text)
                .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                let mut out = io::stdout().lock();
                out.write_all(text.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|e| CliError::usage(format!("cannot write to stdout: {e}")))
            }
        }
    }
}

/// A table of typed cells, rendered as CSV or as `{"meta": ..., "rows": [...]}`.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

pub enum Cell {
    Int(i64),
    Real(f64),
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn csv(&self, spec: &OutputSpec) -> String {
        let mut s = self.header.join(",");
        s.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Int(i) => i.to_string(),
                    Cell::Real(v) => spec.num(*v),
                })
                .collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }

    pub fn json_rows(&self, spec: &OutputSpec) -> Vec<Value> {
        self.rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (key, c) in self.header.iter().zip(row) {
                    let v = match c {
                        Cell::Int(i) => json!(i),
                        Cell::Real(v) => spec.json_num(*v),
                    };
                    obj.insert((*key).to_string(), v);
                }
                Value::Object(obj)
            })
            .collect()
    }
}

pub fn json_document(meta: Value, rows: Vec<Value>) -> String {
    let mut s = serde_json::to_string_pretty(&json!({ "meta": meta, "rows": rows })).expect("json serializes");
    s.push('\n');
    s
}

/// `# key=value` comment lines heading a CSV block.
pub fn csv_comments(pairs: &[(&str, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("# {k}={v}\n")).collect()
}
