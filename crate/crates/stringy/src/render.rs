//! Text, JSON and CSV rendering of library values.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use stringy_core::{Rational, StringyExpression, StringyTerm, UVPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// `{"num": "7", "den": "5"}`
pub fn rational_json(x: &Rational) -> Value {
    json!({ "num": x.numer().to_string(), "den": x.denom().to_string() })
}

/// Integers small enough for a JSON number are emitted as one, others as
/// decimal strings.
pub fn integer_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(x.to_string()),
    }
}

/// `[{"p": 1, "q": 1, "coeff": {...}}, ...]` in canonical term order.
pub fn polynomial_json(p: &UVPolynomial) -> Value {
    Value::Array(
        p.canonical_terms()
            .into_iter()
            .map(|((p, q), c)| json!({ "p": p, "q": q, "coeff": rational_json(c) }))
            .collect(),
    )
}

fn term_json(t: &StringyTerm) -> Value {
    json!({
        "numerator": polynomial_json(t.numerator()),
        "denominator_factors": t.factors(),
    })
}

pub fn expression_json(e: &StringyExpression) -> Value {
    json!({ "terms": e.terms().iter().map(term_json).collect::<Vec<_>>() })
}

/// Rationals in CSV and text cells: `7/5`, integers bare.
pub fn rational_text(x: &Rational) -> String {
    x.to_string()
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(BigInt),
    Rat(Rational),
    Text(String),
}

impl Cell {
    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => integer_json(i),
            Cell::Rat(r) => rational_json(r),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(i) => write!(f, "{i}"),
            Cell::Rat(r) => f.write_str(&rational_text(r)),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

impl From<Rational> for Cell {
    fn from(r: Rational) -> Self {
        Cell::Rat(r)
    }
}

impl From<BigInt> for Cell {
    fn from(i: BigInt) -> Self {
        Cell::Int(i)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

macro_rules! cell_from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Cell {
            fn from(i: $t) -> Self {
                Cell::Int(BigInt::from(i))
            }
        }
    )*};
}
cell_from_int!(i64, u64, u32);

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "columns": self.columns,
            "rows": self.rows.iter().map(|r| r.iter().map(Cell::json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.to_string())).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    /// Space-aligned columns, right-justified.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| cells.iter().map(|r| r[i].len()).chain([self.columns[i].len()]).max().unwrap_or(0))
            .collect();
        let line = |row: &[String]| {
            row.iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let mut out = line(&self.columns);
        out.push('\n');
        for row in &cells {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use stringy_core::exactnum::{int, rat};

    #[test]
    fn rational_schema() {
        assert_eq!(rational_json(&rat(7, 5)).to_string(), r#"{"num":"7","den":"5"}"#);
        assert_eq!(rational_text(&int(8)), "8");
        assert_eq!(rational_text(&rat(-96, 13)), "-96/13");
    }

    #[test]
    fn polynomial_schema() {
        let p = &UVPolynomial::one() + &UVPolynomial::t_pow(1);
        assert_eq!(p.to_string(), "u*v + 1");
        assert_eq!(
            polynomial_json(&p).to_string(),
            r#"[{"p":1,"q":1,"coeff":{"num":"1","den":"1"}},{"p":0,"q":0,"coeff":{"num":"1","den":"1"}}]"#
        );
    }

    #[test]
    fn expression_schema() {
        let t = StringyTerm::new(UVPolynomial::t_binomial(1), [2]).unwrap();
        let v = expression_json(&StringyExpression::from_terms(vec![t]));
        assert_eq!(v["terms"][0]["denominator_factors"], json!([2]));
        assert_eq!(v["terms"][0]["numerator"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn table_formats() {
        let mut t = Table::new(&["n", "e_str", "note"]);
        t.push(vec![7u32.into(), rat(96, 13).into(), "a,b".into()]);
        assert_eq!(t.to_csv(), "n,e_str,note\n7,96/13,\"a,b\"\n");
        assert_eq!(t.to_text(), "n  e_str  note\n7  96/13   a,b\n");
        assert_eq!(t.to_json()["rows"][0][1], json!({"num": "96", "den": "13"}));
    }
}
