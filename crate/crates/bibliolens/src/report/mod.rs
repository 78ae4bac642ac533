//! Tabular results and their CSV, JSON and Markdown renderings.

pub mod sections;
mod svg;
pub mod tables;

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

pub use svg::{line_chart, series_csv, Chart};

use crate::display;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    /// Full-precision value plus the string shown to readers.
    Real {
        value: f64,
        display: String,
    },
    Empty,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    pub fn int(n: impl TryInto<i64>) -> Cell {
        Cell::Int(n.try_into().unwrap_or(i64::MAX))
    }

    pub fn real(value: f64, decimals: usize) -> Cell {
        Cell::Real {
            value,
            display: display::real(value, decimals),
        }
    }

    /// `num/den` as a half-up percentage with two decimals.
    pub fn percent(num: u64, den: u64) -> Cell {
        match display::percent(num, den, 2) {
            Some(d) => Cell::Real {
                value: 100.0 * num as f64 / den as f64,
                display: d,
            },
            None => Cell::Empty,
        }
    }

    pub fn shown(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Real { display, .. } => display.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(n) => json!(n),
            Cell::Real { value, display } => json!({ "value": value, "display": display }),
            Cell::Empty => Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    /// Stable identifier, e.g. `lotka`.
    pub name: String,
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<String>,
}

impl Table {
    pub fn new(name: &str, title: &str, columns: &[&str]) -> Table {
        Table {
            name: name.into(),
            title: title.into(),
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len(), "table {}", self.name);
        self.rows.push(cells);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// First row whose first cell shows `key`.
    pub fn find(&self, key: &str) -> Option<&Vec<Cell>> {
        self.rows.iter().find(|r| r.first().is_some_and(|c| c.shown() == key))
    }

    /// Cell by row key and column name.
    pub fn cell(&self, key: &str, column: &str) -> Option<&Cell> {
        let j = self.columns.iter().position(|c| c == column)?;
        self.find(key).and_then(|r| r.get(j))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Md,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Some(Format::Csv),
            "json" => Some(Format::Json),
            "md" | "markdown" => Some(Format::Md),
            _ => None,
        }
    }

    pub fn from_path(p: &std::path::Path) -> Option<Format> {
        p.extension().and_then(|e| e.to_str()).and_then(Format::parse)
    }
}

fn csv_line(cells: impl IntoIterator<Item = String>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(cells).expect("in-memory csv write");
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("utf-8")
}

fn render_csv(tables: &[Table]) -> String {
    let mut out = String::new();
    let many = tables.len() > 1;
    for (i, t) in tables.iter().enumerate() {
        if many {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "# {}", t.name);
        }
        out.push_str(&csv_line(t.columns.iter().cloned()));
        for r in &t.rows {
            out.push_str(&csv_line(r.iter().map(Cell::shown)));
        }
    }
    out
}

fn render_json(tables: &[Table]) -> String {
    let ts: Vec<Value> = tables
        .iter()
        .map(|t| {
            let mut m = Map::new();
            m.insert("name".into(), json!(t.name));
            m.insert("title".into(), json!(t.title));
            m.insert("columns".into(), json!(t.columns));
            m.insert(
                "rows".into(),
                Value::Array(
                    t.rows
                        .iter()
                        .map(|r| Value::Array(r.iter().map(Cell::to_json).collect()))
                        .collect(),
                ),
            );
            m.insert("notes".into(), json!(t.notes));
            Value::Object(m)
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&json!({ "tables": ts })).expect("json value serializes");
    s.push('\n');
    s
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

fn render_md(tables: &[Table]) -> String {
    let mut out = String::new();
    for (i, t) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "### {}\n", t.title);
        let _ = writeln!(
            out,
            "| {} |",
            t.columns.iter().map(|c| md_escape(c)).collect::<Vec<_>>().join(" | ")
        );
        let _ = writeln!(out, "|{}", "---|".repeat(t.columns.len()));
        for r in &t.rows {
            let _ = writeln!(
                out,
                "| {} |",
                r.iter().map(|c| md_escape(&c.shown())).collect::<Vec<_>>().join(" | ")
            );
        }
        if !t.notes.is_empty() {
            out.push('\n');
            for n in &t.notes {
                let _ = writeln!(out, "- {n}");
            }
        }
    }
    out
}

/// Render tables deterministically with LF line endings.
pub fn render(tables: &[Table], format: Format) -> String {
    match format {
        Format::Csv => render_csv(tables),
        Format::Json => render_json(tables),
        Format::Md => render_md(tables),
    }
}
