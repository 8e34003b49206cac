use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Table {
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn text(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let line = |cells: Vec<&str>, out: &mut String| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(self.headers.clone(), &mut out);
        for row in &self.rows {
            line(row.iter().map(String::as_str).collect(), &mut out);
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

/// What a command hands back: the structured value and a flat table.
pub struct Rendered {
    pub json: String,
    pub table: Table,
    /// Extra lines printed after the table in text mode.
    pub notes: Vec<String>,
}

impl Rendered {
    pub fn new(value: &impl Serialize, table: Table) -> Self {
        Rendered {
            json: serde_json::to_string_pretty(value).expect("serializable"),
            table,
            notes: Vec::new(),
        }
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.json),
            Format::Csv => self.table.csv(),
            Format::Text => {
                let mut s = self.table.text();
                for n in &self.notes {
                    s.push_str(n);
                    s.push('\n');
                }
                s
            }
        }
    }
}

pub fn marks(m: &[u8]) -> String {
    nilorb::numbering::format_marks(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned_text_and_quoted_csv() {
        let mut t = Table::new(vec!["a", "bb"]);
        t.push(vec!["xyz".into(), "1,2".into()]);
        assert_eq!(t.text(), "a    bb\nxyz  1,2\n");
        assert_eq!(t.csv(), "a,bb\nxyz,\"1,2\"\n");
    }
}
