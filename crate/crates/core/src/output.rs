//! Rendering of LISA tables as CSV, JSON and fixed-precision text.
//!
//! Machine formats carry full precision (shortest round-trip representation);
//! text output rounds to a configurable number of decimals.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::analysis::Analysis;
use crate::io::LISA_COLUMNS;
use crate::verification::CheckRecord;

/// Which of the three LISA sets to include in output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Variants {
    pub set1: bool,
    pub set2: bool,
    pub set3: bool,
}

impl Variants {
    pub const ALL: Variants = Variants {
        set1: true,
        set2: true,
        set3: true,
    };

    /// Indexes into [`LISA_COLUMNS`] selected by these variants.
    pub fn columns(&self) -> Vec<usize> {
        let mut cols = Vec::new();
        for base in [0, 5] {
            if self.set1 {
                cols.push(base);
            }
            if self.set2 {
                cols.push(base + 1);
            }
            if self.set3 {
                cols.push(base + 2);
            }
            if self.set1 && self.set2 {
                cols.push(base + 3);
            }
            if self.set1 && self.set3 {
                cols.push(base + 4);
            }
        }
        cols
    }
}

impl FromStr for Variants {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut v = Variants {
            set1: false,
            set2: false,
            set3: false,
        };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "all" => v = Variants::ALL,
                "set1" => v.set1 = true,
                "set2" => v.set2 = true,
                "set3" => v.set3 = true,
                other => return Err(format!("unknown variant `{other}`")),
            }
        }
        if !(v.set1 || v.set2 || v.set3) {
            return Err("variants selector is empty".to_string());
        }
        Ok(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub label: String,
    /// Values in [`LISA_COLUMNS`] order.
    pub values: [f64; 10],
}

/// Unit rows followed by `Sum` and `Expected`.
///
/// The expected row holds what each column sum would be under the global
/// relation attributed to that set: `gamma I`, `n I` and `I` for the Moran
/// sets, `gamma_c sigma^2 C`, `2n^2 C/(n-1)` and `C` for the Geary sets.
/// For sets 1 and 3 it matches the sum; for set 2 it does not.
pub fn table_rows(a: &Analysis) -> Vec<TableRow> {
    let lt = &a.lisa;
    let n = a.n() as f64;
    let mut rows: Vec<TableRow> = (0..a.n())
        .map(|i| TableRow {
            label: lt.labels[i].clone(),
            values: [
                lt.mi1[i],
                lt.mi2[i],
                lt.mi3[i],
                lt.ratio12[i],
                lt.ratio13,
                lt.gc1[i],
                lt.gc2[i],
                lt.gc3[i],
                lt.ratio12[i],
                lt.gratio13,
            ],
        })
        .collect();

    let mut sum = [0.0; 10];
    for row in &rows {
        for (s, v) in sum.iter_mut().zip(&row.values) {
            *s += v;
        }
    }

    let i = a.globals.moran_i;
    let c = a.globals.geary_c;
    let gamma = a.gamma();
    let expected = [
        gamma * i,
        n * i,
        i,
        gamma,
        n * lt.ratio13,
        a.gamma_c() * a.transforms.sigma2 * c,
        2.0 * n * n * c / (n - 1.0),
        c,
        gamma,
        n * lt.gratio13,
    ];

    rows.push(TableRow {
        label: "Sum".to_string(),
        values: sum,
    });
    rows.push(TableRow {
        label: "Expected".to_string(),
        values: expected,
    });
    rows
}

pub fn render_csv(a: &Analysis, variants: Variants) -> String {
    let cols = variants.columns();
    let mut out = String::from("label");
    for &c in &cols {
        out.push(',');
        out.push_str(LISA_COLUMNS[c]);
    }
    out.push('\n');
    for row in table_rows(a) {
        out.push_str(&csv_field(&row.label));
        for &c in &cols {
            let _ = write!(out, ",{}", row.values[c]);
        }
        out.push('\n');
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_text(a: &Analysis, variants: Variants, precision: usize) -> String {
    let p = precision;
    let cols = variants.columns();
    let rows = table_rows(a);
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| cols.iter().map(|&c| format!("{:.p$}", r.values[c])).collect())
        .collect();
    let label_w = rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(5).max(5);
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            cells
                .iter()
                .map(|r| r[k].len())
                .max()
                .unwrap_or(0)
                .max(LISA_COLUMNS[c].len())
        })
        .collect();

    let mut out = String::new();
    let g = &a.globals;
    let _ = writeln!(
        out,
        "n = {}  V0 = {:.p$}  sigma^2 = {:.p$}  s^2 = {:.p$}  gamma = {:.p$}  gamma_c = {:.p$}",
        g.n,
        a.v0(),
        a.transforms.sigma2,
        a.transforms.s2,
        a.gamma(),
        a.gamma_c()
    );
    let _ = writeln!(
        out,
        "I = {:.p$}  C = {:.p$}  I0 = {:.p$}  C0 = {:.p$}",
        g.moran_i, g.geary_c, g.expected_i, g.expected_c
    );
    out.push('\n');
    let _ = write!(out, "{:<label_w$}", "label");
    for (k, &c) in cols.iter().enumerate() {
        let _ = write!(out, "  {:>w$}", LISA_COLUMNS[c], w = widths[k]);
    }
    out.push('\n');
    for (row, cell) in rows.iter().zip(&cells) {
        let _ = write!(out, "{:<label_w$}", row.label);
        for (k, v) in cell.iter().enumerate() {
            let _ = write!(out, "  {:>w$}", v, w = widths[k]);
        }
        out.push('\n');
    }
    out
}

pub fn globals_json(a: &Analysis) -> Value {
    let g = &a.globals;
    json!({
        "n": g.n,
        "V0": a.v0(),
        "sigma2": a.transforms.sigma2,
        "s2": a.transforms.s2,
        "gamma": a.gamma(),
        "gamma_c": a.gamma_c(),
        "I": g.moran_i,
        "C": g.geary_c,
        "I0": g.expected_i,
        "C0": g.expected_c,
    })
}

fn row_json(row: &TableRow, cols: &[usize]) -> Value {
    let mut m = Map::new();
    m.insert("label".into(), Value::from(row.label.clone()));
    for &c in cols {
        m.insert(LISA_COLUMNS[c].into(), Value::from(row.values[c]));
    }
    Value::Object(m)
}

/// JSON document with `config`, `globals`, `lisa`, `summary` and `checks`.
pub fn render_json<C: Serialize>(
    a: &Analysis,
    variants: Variants,
    config: &C,
    checks: &[CheckRecord],
) -> String {
    let cols = variants.columns();
    let rows = table_rows(a);
    let (units, summary) = rows.split_at(a.n());
    let doc = json!({
        "config": config,
        "globals": globals_json(a),
        "lisa": units.iter().map(|r| row_json(r, &cols)).collect::<Vec<_>>(),
        "summary": summary.iter().map(|r| row_json(r, &cols)).collect::<Vec<_>>(),
        "checks": checks,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json document");
    s.push('\n');
    s
}
