//! Text, JSON and CSV rendering of command results.

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::padic::Valuation;
use crate::scalar::{PiRational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(BigInt),
    Pi(PiRational),
    Bool(bool),
    Text(String),
    Valuation(Valuation),
}

impl Cell {
    pub fn int(n: impl Into<BigInt>) -> Cell {
        Cell::Int(n.into())
    }

    pub fn rat(r: Rational) -> Cell {
        Cell::Pi(PiRational::rational(r))
    }

    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    fn to_text(&self, ascii: bool) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Pi(x) if ascii => x.to_ascii(),
            Cell::Pi(x) => x.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Valuation(v) => v.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(n) => {
                Value::Number(n.to_string().parse().expect("integers are JSON numbers"))
            }
            Cell::Pi(x) => serde_json::to_value(x).expect("PiRational serializes"),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Valuation(Valuation::Finite(v)) => Value::from(*v),
            Cell::Valuation(Valuation::Infinite) => Value::String("inf".into()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Scalar,
    Record,
    Table,
}

/// A rectangular result with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    shape: Shape,
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn scalar(value: Cell) -> Report {
        Report {
            shape: Shape::Scalar,
            columns: vec!["value".into()],
            rows: vec![vec![value]],
        }
    }

    pub fn record(fields: Vec<(&str, Cell)>) -> Report {
        let (columns, row): (Vec<String>, Vec<Cell>) =
            fields.into_iter().map(|(k, v)| (k.to_string(), v)).unzip();
        Report {
            shape: Shape::Record,
            columns,
            rows: vec![row],
        }
    }

    pub fn table(columns: &[&str], rows: Vec<Vec<Cell>>) -> Report {
        debug_assert!(rows.iter().all(|r| r.len() == columns.len()));
        Report {
            shape: Shape::Table,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows,
        }
    }

    pub fn render(&self, format: Format, ascii: bool) -> String {
        match format {
            Format::Text => self.render_text(ascii),
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(ascii),
        }
    }

    fn render_text(&self, ascii: bool) -> String {
        match self.shape {
            Shape::Scalar => format!("{}\n", self.rows[0][0].to_text(ascii)),
            Shape::Record => {
                let width = self
                    .columns
                    .iter()
                    .map(|c| c.chars().count())
                    .max()
                    .unwrap_or(0);
                self.columns
                    .iter()
                    .zip(&self.rows[0])
                    .map(|(k, v)| format!("{k:<width$}  {}\n", v.to_text(ascii)))
                    .collect()
            }
            Shape::Table => {
                let cells: Vec<Vec<String>> = std::iter::once(self.columns.clone())
                    .chain(
                        self.rows
                            .iter()
                            .map(|r| r.iter().map(|c| c.to_text(ascii)).collect()),
                    )
                    .collect();
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|i| {
                        cells
                            .iter()
                            .map(|r| r[i].chars().count())
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                cells
                    .iter()
                    .map(|row| {
                        let line: Vec<String> = row
                            .iter()
                            .zip(&widths)
                            .map(|(c, &w)| {
                                let pad = w - c.chars().count();
                                format!("{c}{}", " ".repeat(pad))
                            })
                            .collect();
                        format!("{}\n", line.join("  ").trim_end())
                    })
                    .collect()
            }
        }
    }

    fn row_object(&self, row: &[Cell]) -> Value {
        let map: Map<String, Value> = self
            .columns
            .iter()
            .cloned()
            .zip(row.iter().map(Cell::to_json))
            .collect();
        Value::Object(map)
    }

    fn render_json(&self) -> String {
        let value = match self.shape {
            Shape::Scalar => self.rows[0][0].to_json(),
            Shape::Record => self.row_object(&self.rows[0]),
            Shape::Table => Value::Array(self.rows.iter().map(|r| self.row_object(r)).collect()),
        };
        format!("{value}\n")
    }

    fn render_csv(&self, ascii: bool) -> String {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        writer.write_record(&self.columns).expect("in-memory csv");
        for row in &self.rows {
            writer
                .write_record(row.iter().map(|c| c.to_text(ascii)))
                .expect("in-memory csv");
        }
        String::from_utf8(writer.into_inner().expect("in-memory csv")).expect("csv output is utf-8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn scalar_formats() {
        let r = Report::scalar(Cell::rat(rat(5, 2)));
        assert_eq!(r.render(Format::Text, false), "5/2\n");
        assert_eq!(
            r.render(Format::Json, false),
            "{\"num\":5,\"den\":2,\"pi_exp\":0}\n"
        );
        assert_eq!(r.render(Format::Csv, false), "value\n5/2\n");
    }

    #[test]
    fn table_text_is_aligned() {
        let r = Report::table(
            &["q", "covolume"],
            vec![
                vec![Cell::int(3), Cell::Pi(PiRational::times_pi(rat(1, 3)))],
                vec![Cell::int(10), Cell::Pi(PiRational::times_pi(rat(4, 5)))],
            ],
        );
        assert_eq!(
            r.render(Format::Text, false),
            "q   covolume\n3   1/3·π\n10  4/5·π\n"
        );
        assert_eq!(
            r.render(Format::Text, true),
            "q   covolume\n3   1/3*pi\n10  4/5*pi\n"
        );
    }

    #[test]
    fn record_json_keys_follow_columns() {
        let r = Report::record(vec![("zeta", Cell::Bool(true)), ("alpha", Cell::int(1))]);
        assert_eq!(
            r.render(Format::Json, false),
            "{\"zeta\":true,\"alpha\":1}\n"
        );
        assert_eq!(r.render(Format::Text, false), "zeta   true\nalpha  1\n");
    }
}
