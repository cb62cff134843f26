//! Rectangular numeric tables and their CSV form.

use std::fs;
use std::path::Path;

use crate::error::{CliError, Result};

/// Minimum number of significant digits written per value.
pub const MIN_SIGNIFICANT: usize = 9;

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesTable {
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl SeriesTable {
    pub fn new(columns: Vec<String>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    /// Appends a row; panics if its width differs from the header.
    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match header");
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| format_value(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_csv()).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    /// Parses text produced by [`SeriesTable::to_csv`].
    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| CliError::Syntax {
            line: 1,
            msg: "missing header".into(),
        })?;
        let columns: Vec<String> = header.split(',').map(|c| c.trim().to_string()).collect();
        if columns.iter().any(String::is_empty) {
            return Err(CliError::Syntax {
                line: 1,
                msg: "empty column name".into(),
            });
        }
        let mut table = Self::new(columns);
        for (i, line) in lines {
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|cell| {
                    cell.trim().parse::<f64>().map_err(|_| CliError::Syntax {
                        line: i + 1,
                        msg: format!("not a number: {cell:?}"),
                    })
                })
                .collect::<Result<Vec<f64>>>()?;
            if row.len() != table.columns.len() {
                return Err(CliError::Syntax {
                    line: i + 1,
                    msg: format!("{} cells, expected {}", row.len(), table.columns.len()),
                });
            }
            table.rows.push(row);
        }
        Ok(table)
    }
}

/// Shortest round-trip decimal form, padded with zeros to at least
/// [`MIN_SIGNIFICANT`] significant digits. Very small or large magnitudes use
/// exponent notation.
pub fn format_value(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return format!("0.{}", "0".repeat(MIN_SIGNIFICANT));
    }
    let a = v.abs();
    if (1e-5..1e15).contains(&a) {
        pad_significant(format!("{v}"))
    } else {
        let s = format!("{v:e}");
        let (mantissa, exp) = s.split_once('e').expect("exponent form");
        format!("{}e{exp}", pad_significant(mantissa.to_string()))
    }
}

fn pad_significant(mut s: String) -> String {
    let digits: String = s.chars().filter(char::is_ascii_digit).collect();
    let significant = digits.trim_start_matches('0').len();
    if significant < MIN_SIGNIFICANT {
        if !s.contains('.') {
            s.push('.');
        }
        s.push_str(&"0".repeat(MIN_SIGNIFICANT - significant));
    }
    s
}
