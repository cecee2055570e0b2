//! Global Moran's I, global Geary's C and the relation between them.
//!
//! All functions here take globally normalized weights. Row-normalized
//! weights break the symmetry the identities rely on, so they are rejected
//! at compile time.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrices::GlobalWeights;
use crate::variables::TransformSet;

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GlobalStats {
    pub n: usize,
    pub moran_i: f64,
    pub geary_c: f64,
    pub expected_i: f64,
    pub expected_c: f64,
}

impl GlobalStats {
    pub fn compute(wg: &GlobalWeights, t: &TransformSet) -> Result<Self> {
        let moran_i = global_moran(wg, t)?;
        let geary_c = global_geary(wg, t)?;
        let (expected_i, expected_c) = expected_values(wg, t)?;
        Ok(Self {
            n: t.n(),
            moran_i,
            geary_c,
            expected_i,
            expected_c,
        })
    }

    /// Whether `I` lies in `[-1, 1]` and `C` in `[0, 2]`.
    ///
    /// These are the textbook ranges; arbitrary weight matrices can leave
    /// them, so this is informational only.
    pub fn within_nominal_bounds(&self) -> bool {
        (-1.0..=1.0).contains(&self.moran_i) && (0.0..=2.0).contains(&self.geary_c)
    }
}

/// `I = sum_i z_i sum_j w_ij z_j` with population z-scores.
pub fn global_moran(wg: &GlobalWeights, t: &TransformSet) -> Result<f64> {
    check_dims(wg.n(), t.n())?;
    Ok((0..t.n())
        .map(|i| t.z[i] * dot(wg.row(i), &t.z))
        .sum())
}

/// `C = 1/2 sum_i sum_j w_ij (z*_i - z*_j)^2` with sample z-scores.
pub fn global_geary(wg: &GlobalWeights, t: &TransformSet) -> Result<f64> {
    check_dims(wg.n(), t.n())?;
    Ok((0..t.n())
        .map(|i| 0.5 * squared_diff_sum(wg.row(i), &t.zs, t.zs[i]))
        .sum())
}

/// `sum_i sum_j w_ij z_j^2`, the quadratic term `o' W z^2`.
pub fn weighted_z2_sum(wg: &GlobalWeights, t: &TransformSet) -> Result<f64> {
    check_dims(wg.n(), t.n())?;
    let z2: Vec<f64> = t.z.iter().map(|z| z * z).collect();
    Ok((0..t.n()).map(|i| dot(wg.row(i), &z2)).sum())
}

/// Returns `(C, ((n-1)/n) (o' W z^2 - I))`; the two agree on any input.
pub fn moran_geary_identity(wg: &GlobalWeights, t: &TransformSet) -> Result<(f64, f64)> {
    let lhs = global_geary(wg, t)?;
    let n = t.n() as f64;
    let rhs = (n - 1.0) / n * (weighted_z2_sum(wg, t)? - global_moran(wg, t)?);
    Ok((lhs, rhs))
}

/// `I0 = 1/(1-n)` and `C0 = ((n-1)/n) o' W z^2 + 1/n`.
pub fn expected_values(wg: &GlobalWeights, t: &TransformSet) -> Result<(f64, f64)> {
    let n = t.n() as f64;
    let i0 = 1.0 / (1.0 - n);
    let c0 = (n - 1.0) / n * weighted_z2_sum(wg, t)? + 1.0 / n;
    Ok((i0, c0))
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `sum_j w_j (c - x_j)^2`.
pub(crate) fn squared_diff_sum(w: &[f64], x: &[f64], c: f64) -> f64 {
    w.iter()
        .zip(x)
        .map(|(wj, xj)| {
            let d = c - xj;
            wj * d * d
        })
        .sum()
}
