//! Distance, contiguity and weight matrices.
//!
//! The pipeline is `DistanceMatrix -> ContiguityMatrix -> WeightMatrix`.
//! A distance kernel turns proximity into closeness, and the closeness matrix
//! is then normalized either globally (entries sum to 1, symmetry kept) or by
//! row (each row sums to 1, symmetry generally lost). The normalization is
//! carried in the type so that statistics defined only for one of the two
//! cannot be handed the other.

use std::fmt;
use std::marker::PhantomData;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Relative tolerance for `|d_ij - d_ji|` when validating distance input.
pub const SYMMETRY_TOLERANCE: f64 = 1e-9;

/// Symmetric matrix of pairwise distances between `n` labelled units.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    labels: Vec<String>,
    d: Vec<f64>,
}

impl DistanceMatrix {
    /// Validates and wraps a row-major `n x n` distance table.
    pub fn new(labels: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = labels.len();
        if n < 2 {
            return Err(Error::TooFewUnits(n));
        }
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        let mut d = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            d.extend_from_slice(row);
        }
        if let Some(pos) = d.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(pos));
        }
        for i in 0..n {
            let dii = d[i * n + i];
            if dii != 0.0 {
                return Err(Error::NonZeroDiagonal { index: i, value: dii });
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let dij = d[i * n + j];
                let dji = d[j * n + i];
                if dij <= 0.0 {
                    return Err(Error::NonPositiveOffDiagonal { i, j, value: dij });
                }
                if (dij - dji).abs() > SYMMETRY_TOLERANCE * dij.abs().max(1.0) {
                    return Err(Error::Asymmetric { i, j, dij, dji });
                }
            }
        }
        Ok(Self { labels, d })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n() + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let n = self.n();
        &self.d[i * n..(i + 1) * n]
    }

    /// Looks up a distance by unit label.
    pub fn distance(&self, a: &str, b: &str) -> Option<f64> {
        let i = self.labels.iter().position(|l| l == a)?;
        let j = self.labels.iter().position(|l| l == b)?;
        Some(self.get(i, j))
    }

    /// Returns a copy with every distance multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let n = self.n();
        let rows = (0..n)
            .map(|i| self.row(i).iter().map(|v| v * factor).collect())
            .collect();
        Self::new(self.labels.clone(), rows)
    }
}

/// Distance-decay function mapping `d_ij` to a contiguity weight `v_ij`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kernel {
    /// `1 / d`
    InverseDistance,
    /// `d^(-beta)`
    Power(f64),
    /// `1` when `d <= radius`, else `0`
    Threshold(f64),
}

impl Kernel {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Kernel::InverseDistance => Ok(()),
            Kernel::Power(beta) if beta > 0.0 && beta.is_finite() => Ok(()),
            Kernel::Power(beta) => Err(Error::InvalidKernel(format!(
                "power exponent must be positive, got {beta}"
            ))),
            Kernel::Threshold(r) if r > 0.0 && r.is_finite() => Ok(()),
            Kernel::Threshold(r) => Err(Error::InvalidKernel(format!(
                "threshold radius must be positive, got {r}"
            ))),
        }
    }

    pub fn apply(&self, d: f64) -> f64 {
        match *self {
            Kernel::InverseDistance => 1.0 / d,
            Kernel::Power(beta) => d.powf(-beta),
            Kernel::Threshold(r) => {
                if d <= r {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kernel::InverseDistance => write!(f, "inverse"),
            Kernel::Power(beta) => write!(f, "power:{beta}"),
            Kernel::Threshold(r) => write!(f, "threshold:{r}"),
        }
    }
}

impl FromStr for Kernel {
    type Err = Error;

    /// Parses `inverse`, `power:B` or `threshold:R`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        let param = |arg: Option<&str>| -> Result<f64> {
            let arg = arg.ok_or_else(|| Error::InvalidKernel(format!("`{name}` needs a parameter")))?;
            arg.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidKernel(format!("bad parameter `{arg}`")))
        };
        let kernel = match name {
            "inverse" if arg.is_none() => Kernel::InverseDistance,
            "power" => Kernel::Power(param(arg)?),
            "threshold" => Kernel::Threshold(param(arg)?),
            _ => return Err(Error::InvalidKernel(s.to_string())),
        };
        kernel.validate()?;
        Ok(kernel)
    }
}

/// Kernel-transformed closeness matrix with cached row sums and total.
#[derive(Debug, Clone, PartialEq)]
pub struct ContiguityMatrix {
    n: usize,
    v: Vec<f64>,
    row_sums: Vec<f64>,
    total: f64,
    kernel: Kernel,
}

/// Applies `kernel` off the diagonal and records `V_i` and `V0`.
pub fn build_contiguity(d: &DistanceMatrix, kernel: Kernel) -> Result<ContiguityMatrix> {
    kernel.validate()?;
    let n = d.n();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let dij = d.get(i, j);
            if dij <= 0.0 {
                return Err(Error::NonPositiveOffDiagonal { i, j, value: dij });
            }
            // one evaluation per pair keeps v exactly symmetric
            let vij = kernel.apply(dij);
            v[i * n + j] = vij;
            v[j * n + i] = vij;
        }
    }
    let row_sums: Vec<f64> = v.chunks(n).map(|row| row.iter().sum()).collect();
    if let Some(index) = row_sums.iter().position(|&s| !(s > 0.0)) {
        return Err(Error::EmptyRow { index });
    }
    let total = row_sums.iter().sum();
    Ok(ContiguityMatrix {
        n,
        v,
        row_sums,
        total,
        kernel,
    })
}

impl ContiguityMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.v[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.v[i * self.n..(i + 1) * self.n]
    }

    /// `V0`, the sum of all entries.
    pub fn total(&self) -> f64 {
        self.total
    }

    /// `V_i`, the per-row sums.
    pub fn row_sums(&self) -> &[f64] {
        &self.row_sums
    }

    pub fn kernel(&self) -> Kernel {
        self.kernel
    }
}

/// Which normalization produced a [`WeightMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    Global,
    Row,
}

mod sealed {
    pub trait Sealed {}
}

/// Type-level tag for a weight matrix normalization.
pub trait Normalization: sealed::Sealed + fmt::Debug + Clone + Copy {
    const NORM: Norm;
}

/// Entries sum to 1 over the whole matrix.
#[derive(Debug, Clone, Copy)]
pub struct Global;

/// Each row sums to 1.
#[derive(Debug, Clone, Copy)]
pub struct Row;

impl sealed::Sealed for Global {}
impl sealed::Sealed for Row {}

impl Normalization for Global {
    const NORM: Norm = Norm::Global;
}

impl Normalization for Row {
    const NORM: Norm = Norm::Row;
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix<N: Normalization> {
    n: usize,
    w: Vec<f64>,
    _norm: PhantomData<N>,
}

pub type GlobalWeights = WeightMatrix<Global>;
pub type RowWeights = WeightMatrix<Row>;

impl<N: Normalization> WeightMatrix<N> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn norm(&self) -> Norm {
        N::NORM
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.w[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.w[i * self.n..(i + 1) * self.n]
    }

    pub fn total(&self) -> f64 {
        self.w.iter().sum()
    }

    pub fn is_symmetric(&self, rel_tol: f64) -> bool {
        (0..self.n).all(|i| {
            (0..i).all(|j| {
                let a = self.get(i, j);
                let b = self.get(j, i);
                (a - b).abs() <= rel_tol * a.abs().max(1.0)
            })
        })
    }
}

/// `w_ij = v_ij / V0`.
pub fn normalize_global(v: &ContiguityMatrix) -> GlobalWeights {
    let v0 = v.total();
    WeightMatrix {
        n: v.n,
        w: v.v.iter().map(|x| x / v0).collect(),
        _norm: PhantomData,
    }
}

/// `w*_ij = v_ij / V_i`.
pub fn normalize_row(v: &ContiguityMatrix) -> Result<RowWeights> {
    let n = v.n;
    if let Some(index) = v.row_sums.iter().position(|&s| !(s > 0.0)) {
        return Err(Error::EmptyRow { index });
    }
    let w = v
        .v
        .chunks(n)
        .zip(&v.row_sums)
        .flat_map(|(row, s)| row.iter().map(move |x| x / s))
        .collect();
    Ok(WeightMatrix {
        n,
        w,
        _norm: PhantomData,
    })
}
