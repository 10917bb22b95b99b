use std::fmt::Write;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Csv,
    Pretty,
    Json,
}

/// Rows of string cells under a fixed header.
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &str) -> Self {
        Self {
            header: header.split(',').map(str::to_owned).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<I: IntoIterator<Item = String>>(&mut self, row: I) {
        self.rows.push(row.into_iter().collect());
    }

    pub fn csv(&self) -> String {
        let mut out = self.header.join(",") + "\n";
        for row in &self.rows {
            out += &row.join(",");
            out.push('\n');
        }
        out
    }

    pub fn pretty(&self) -> String {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].chars().count())
                    .chain([self.header[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (c, cell) in cells.iter().enumerate() {
                if c > 0 {
                    s += " | ";
                }
                let pad = widths[c] - cell.chars().count();
                write!(s, "{cell}{}", " ".repeat(pad)).unwrap();
            }
            s.trim_end().to_owned() + "\n"
        };
        let mut out = line(&self.header);
        out += &widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("-+-");
        out.push('\n');
        for row in &self.rows {
            out += &line(row);
        }
        out
    }
}

/// Key/value lines for the pretty form.
pub fn pairs(items: &[(&str, String)]) -> String {
    let width = items.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    items
        .iter()
        .map(|(k, v)| format!("{k:width$}  {v}").trim_end().to_owned() + "\n")
        .collect()
}

pub fn json(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialize") + "\n"
}

pub fn list(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
