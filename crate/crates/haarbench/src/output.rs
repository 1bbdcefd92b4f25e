//! Tabular experiment output: CSV with `#`-prefixed metadata header lines,
//! or a JSON object `{metadata, columns, rows}`.
//!
//! Floats are emitted in Rust's shortest round-trip decimal form in both
//! formats, so the CSV and JSON renderings of one run carry identical
//! numeric values. Files are written to a temporary sibling and renamed into
//! place, so a failed run never leaves a partial file behind.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// One cell of an output table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(u64),
    /// Missing value: empty in CSV, `null` in JSON.
    Null,
}

/// A finished experiment: provenance metadata plus named columns of rows.
#[derive(Debug, Clone, PartialEq)]
pub struct DataTable {
    /// Ordered key/value provenance pairs (command, parameters, seed, version).
    pub metadata: Vec<(String, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl DataTable {
    /// Render as CSV: `# key = value` header lines, then a column header
    /// row, then one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "# {k} = {v}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(render_cell_csv).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }

    /// Render as a JSON object `{"metadata": {...}, "columns": [...],
    /// "rows": [[...]]}` with a trailing newline.
    pub fn to_json(&self) -> String {
        let metadata: serde_json::Map<String, serde_json::Value> = self
            .metadata
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| serde_json::Value::Array(row.iter().map(render_cell_json).collect()))
            .collect();
        let value = serde_json::json!({
            "metadata": metadata,
            "columns": self.columns,
            "rows": rows,
        });
        let mut text = serde_json::to_string_pretty(&value).expect("table serializes");
        text.push('\n');
        text
    }
}

fn render_cell_csv(cell: &Cell) -> String {
    match *cell {
        Cell::Float(x) => format!("{x}"),
        Cell::Int(n) => format!("{n}"),
        Cell::Null => String::new(),
    }
}

fn render_cell_json(cell: &Cell) -> serde_json::Value {
    match *cell {
        Cell::Float(x) => serde_json::Number::from_f64(x)
            .map(serde_json::Value::Number)
            .unwrap_or(serde_json::Value::Null),
        Cell::Int(n) => serde_json::Value::Number(n.into()),
        Cell::Null => serde_json::Value::Null,
    }
}

/// Write `contents` to `path` atomically (write-then-rename in the target
/// directory).
pub fn atomic_write(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}
