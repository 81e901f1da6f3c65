//! Tabular data files and run manifests.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use super::config::{Format, RunConfig};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Null,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v:.16e}"),
            Cell::Null => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Float(v) => json!(v),
            Cell::Null => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Null, Cell::Float)
    }
}

/// Header metadata followed by fixed-schema records.
#[derive(Debug, Clone)]
pub struct Table {
    pub meta: Vec<(String, Value)>,
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &'static [&'static str]) -> Self {
        Self {
            meta: Vec::new(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl Into<Value>) {
        self.meta.push((key.to_owned(), value.into()));
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// `#`-prefixed `key: value` comments, a header row, then one line per record.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.meta {
            let text = match v {
                Value::String(t) => t.clone(),
                Value::Number(n) => match n.as_f64() {
                    Some(f) if !n.is_i64() && !n.is_u64() => format!("{f:.16e}"),
                    _ => n.to_string(),
                },
                other => other.to_string(),
            };
            let _ = writeln!(s, "# {k}: {text}");
        }
        s.push_str(&self.columns.join(","));
        s.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }

    /// `{"meta": {...}, "records": [{column: value, ...}, ...]}`.
    pub fn to_json(&self) -> String {
        let meta: Map<String, Value> = self.meta.iter().cloned().collect();
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let rec: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| ((*c).to_owned(), v.json()))
                    .collect();
                Value::Object(rec)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&json!({ "meta": meta, "records": records }))
            .expect("table serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

/// `<out>.manifest.json` next to `out`.
pub fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

/// Writes `data` to `out` and the sidecar manifest beside it.
pub fn write_with_manifest(
    out: &Path,
    data: &str,
    command: &str,
    format: Option<Format>,
    config: &RunConfig,
    wall_clock_seconds: f64,
) -> Result<()> {
    std::fs::write(out, data)?;
    let started = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs_f64())
        .unwrap_or(0.0);
    let manifest = json!({
        "tool": env!("CARGO_PKG_NAME"),
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "output": out.display().to_string(),
        "format": format.map(|f| f.as_str()),
        "config": config,
        "config_ini": config.to_ini(),
        "wall_clock_seconds": wall_clock_seconds,
        "finished_unix_seconds": started,
    });
    let mut text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    text.push('\n');
    std::fs::write(manifest_path(out), text)?;
    Ok(())
}
