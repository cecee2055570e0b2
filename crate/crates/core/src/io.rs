//! CSV ingestion for distance matrices, attribute tables and LISA tables.
//!
//! Distance files look like
//!
//! ```text
//! id,A,B,C
//! A,0,1.5,2
//! B,1.5,0,3
//! C,2,3,0
//! ```
//!
//! and value files like `id,value` or `id,2000,2010,...` with rows in the
//! same label order as the distance file.

use std::io::Read;
use std::path::{Path, PathBuf};

use csv::{ReaderBuilder, StringRecord};

use crate::error::{Error, Result};
use crate::lisa::LisaTable;
use crate::matrices::DistanceMatrix;
use crate::variables::AttributeVector;

fn parse_err(path: &Path, line: u64, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

fn csv_err(path: &Path, e: csv::Error) -> Error {
    let line = e.position().map(|p| p.line()).unwrap_or(0);
    let message = match e.kind() {
        csv::ErrorKind::UnequalLengths {
            expected_len, len, ..
        } => format!("expected {expected_len} fields, found {len}"),
        _ => e.to_string(),
    };
    parse_err(path, line, message)
}

fn open(path: &Path) -> Result<std::fs::File> {
    std::fs::File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn records<R: Read>(reader: R, path: &Path) -> Result<(StringRecord, Vec<(u64, StringRecord)>)> {
    let mut rdr = ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = rdr.headers().map_err(|e| csv_err(path, e))?.clone();
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| csv_err(path, e))?;
        let line = rec.position().map(|p| p.line()).unwrap_or(0);
        rows.push((line, rec));
    }
    Ok((header, rows))
}

fn number(path: &Path, line: u64, field: &str) -> Result<f64> {
    field
        .parse::<f64>()
        .map_err(|_| parse_err(path, line, format!("`{field}` is not a number")))
}

pub fn parse_distances<R: Read>(reader: R, path: &Path) -> Result<DistanceMatrix> {
    let (header, rows) = records(reader, path)?;
    if header.len() < 2 {
        return Err(parse_err(path, 1, "header must be `id,<label1>,...,<labeln>`"));
    }
    let labels: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    if rows.len() != labels.len() {
        return Err(parse_err(
            path,
            rows.last().map(|r| r.0).unwrap_or(1),
            format!("expected {} rows, found {}", labels.len(), rows.len()),
        ));
    }
    let mut matrix = Vec::with_capacity(rows.len());
    for (k, (line, rec)) in rows.iter().enumerate() {
        let label = &rec[0];
        if label != labels[k] {
            return Err(parse_err(
                path,
                *line,
                format!("row label `{label}` does not match column label `{}`", labels[k]),
            ));
        }
        let values = rec
            .iter()
            .skip(1)
            .map(|f| number(path, *line, f))
            .collect::<Result<Vec<_>>>()?;
        matrix.push(values);
    }
    DistanceMatrix::new(labels, matrix)
}

/// Reads one attribute column; `column = None` selects the first value column.
pub fn parse_values<R: Read>(reader: R, path: &Path, column: Option<&str>) -> Result<AttributeVector> {
    let (header, rows) = records(reader, path)?;
    if header.len() < 2 {
        return Err(parse_err(path, 1, "header must be `id,<column>,...`"));
    }
    let col = match column {
        None => 1,
        Some(name) => header
            .iter()
            .skip(1)
            .position(|h| h == name)
            .map(|p| p + 1)
            .ok_or_else(|| parse_err(path, 1, format!("no column named `{name}`")))?,
    };
    let mut labels = Vec::with_capacity(rows.len());
    let mut x = Vec::with_capacity(rows.len());
    for (line, rec) in &rows {
        labels.push(rec[0].to_string());
        x.push(number(path, *line, &rec[col])?);
    }
    AttributeVector::new(labels, x)
}

pub fn read_distances(path: &Path) -> Result<DistanceMatrix> {
    parse_distances(open(path)?, path)
}

pub fn read_values(path: &Path, column: Option<&str>) -> Result<AttributeVector> {
    parse_values(open(path)?, path, column)
}

/// Column headers of the full LISA table, in output order.
pub const LISA_COLUMNS: [&str; 10] = [
    "MI1", "MI2", "MI3", "MI1/MI2", "MI1/MI3", "GC1", "GC2", "GC3", "GC1/GC2", "GC1/GC3",
];

/// Reads back a CSV written by `compute --variants all --format csv`.
///
/// The final two rows (sum and expected) are dropped.
pub fn parse_lisa_csv<R: Read>(reader: R, path: &Path) -> Result<LisaTable> {
    let (header, rows) = records(reader, path)?;
    let mut idx = [0usize; 10];
    for (k, name) in LISA_COLUMNS.iter().enumerate() {
        idx[k] = header
            .iter()
            .position(|h| h == *name)
            .ok_or_else(|| parse_err(path, 1, format!("missing column `{name}`")))?;
    }
    if rows.len() < 3 {
        return Err(parse_err(path, 1, "table has no unit rows"));
    }
    let units = &rows[..rows.len() - 2];
    let mut table = LisaTable {
        labels: Vec::new(),
        mi1: Vec::new(),
        mi2: Vec::new(),
        mi3: Vec::new(),
        gc1: Vec::new(),
        gc2: Vec::new(),
        gc3: Vec::new(),
        ratio12: Vec::new(),
        ratio13: 0.0,
        gratio13: 0.0,
    };
    for (line, rec) in units {
        let get = |k: usize| number(path, *line, &rec[idx[k]]);
        table.labels.push(rec[0].to_string());
        table.mi1.push(get(0)?);
        table.mi2.push(get(1)?);
        table.mi3.push(get(2)?);
        table.ratio12.push(get(3)?);
        table.ratio13 = get(4)?;
        table.gc1.push(get(5)?);
        table.gc2.push(get(6)?);
        table.gc3.push(get(7)?);
        table.gratio13 = get(9)?;
    }
    Ok(table)
}

pub fn read_lisa_csv(path: &Path) -> Result<LisaTable> {
    parse_lisa_csv(open(path)?, path)
}

pub fn write_file(path: &Path, body: &str) -> Result<()> {
    std::fs::write(path, body).map_err(|source| Error::Io {
        path: PathBuf::from(path),
        source,
    })
}
