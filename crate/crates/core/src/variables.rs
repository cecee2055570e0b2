//! Size-variable transforms: centralization, z-scores, range and global normalization.

use crate::error::{Error, Result};

/// Labelled size variable, one value per spatial unit.
#[derive(Debug, Clone, PartialEq)]
pub struct AttributeVector {
    labels: Vec<String>,
    x: Vec<f64>,
}

impl AttributeVector {
    pub fn new(labels: Vec<String>, x: Vec<f64>) -> Result<Self> {
        if labels.len() != x.len() {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                found: x.len(),
            });
        }
        if x.len() < 2 {
            return Err(Error::TooFewUnits(x.len()));
        }
        if let Some(pos) = x.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(pos));
        }
        Ok(Self { labels, x })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn values(&self) -> &[f64] {
        &self.x
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Applies `x -> a*x + b` to every value.
    pub fn affine(&self, a: f64, b: f64) -> Self {
        Self {
            labels: self.labels.clone(),
            x: self.x.iter().map(|v| a * v + b).collect(),
        }
    }

    /// Fails unless `labels` equals this vector's labels in the same order.
    pub fn check_labels(&self, labels: &[String]) -> Result<()> {
        if labels.len() != self.labels.len() {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                found: self.labels.len(),
            });
        }
        for (index, (expected, found)) in labels.iter().zip(&self.labels).enumerate() {
            if expected != found {
                return Err(Error::LabelMismatch {
                    index,
                    expected: expected.clone(),
                    found: found.clone(),
                });
            }
        }
        Ok(())
    }
}

/// Centralized and standardized forms of an attribute.
///
/// `z` uses the population standard deviation (divisor `n`) and feeds the
/// Moran statistics; `zs` uses the sample standard deviation (divisor `n-1`)
/// and feeds the canonical Geary statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformSet {
    pub y: Vec<f64>,
    pub z: Vec<f64>,
    pub zs: Vec<f64>,
    pub mean: f64,
    pub sigma2: f64,
    pub s2: f64,
}

impl TransformSet {
    pub fn n(&self) -> usize {
        self.y.len()
    }

    pub fn sigma(&self) -> f64 {
        self.sigma2.sqrt()
    }

    pub fn s(&self) -> f64 {
        self.s2.sqrt()
    }
}

/// Two-pass mean and variance, then both z-score variants.
pub fn transform(x: &AttributeVector) -> Result<TransformSet> {
    let values = x.values();
    let n = values.len();
    if n < 2 {
        return Err(Error::TooFewUnits(n));
    }
    let nf = n as f64;
    let mean = values.iter().sum::<f64>() / nf;
    let y: Vec<f64> = values.iter().map(|v| v - mean).collect();
    let ss: f64 = y.iter().map(|d| d * d).sum();
    let sigma2 = ss / nf;
    let s2 = ss / (nf - 1.0);

    // all-equal input leaves only rounding residue in y
    let scale = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let floor = (f64::EPSILON * scale * 4.0).powi(2);
    if !(sigma2 > floor) {
        return Err(Error::ZeroVariance);
    }

    let sigma = sigma2.sqrt();
    let s = s2.sqrt();
    let z = y.iter().map(|d| d / sigma).collect();
    let zs = y.iter().map(|d| d / s).collect();
    Ok(TransformSet {
        y,
        z,
        zs,
        mean,
        sigma2,
        s2,
    })
}

/// `(x - min) / (max - min)`.
pub fn range_normalize(x: &AttributeVector) -> Result<Vec<f64>> {
    let values = x.values();
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let range = max - min;
    if !(range > 0.0) {
        return Err(Error::ZeroRange);
    }
    Ok(values.iter().map(|v| (v - min) / range).collect())
}

/// `x / sum(x)`.
pub fn global_normalize_vector(x: &AttributeVector) -> Result<Vec<f64>> {
    let total: f64 = x.values().iter().sum();
    if total == 0.0 {
        return Err(Error::ZeroSum);
    }
    Ok(x.values().iter().map(|v| v / total).collect())
}
