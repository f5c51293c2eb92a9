//! `key=value` output and its aligned human form.

use std::fmt::Display;

use crate::args::Format;

/// Ordered key/value facts produced by a command.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Facts {
    entries: Vec<(String, String)>,
}

impl Facts {
    pub fn new() -> Self {
        Facts::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn extend(&mut self, other: Facts) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => self.entries.iter().map(|(k, v)| format!("{k}={v}\n")).collect(),
            Format::Human => {
                let width = self.entries.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                self.entries
                    .iter()
                    .map(|(k, v)| format!("{k:<width$}  {v}\n"))
                    .collect()
            }
        }
    }
}

/// Left-aligned table with a header row.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    out.push_str(&line(widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}
