//! Local Moran indexes and local Geary coefficients in three formulations.
//!
//! | set | weights              | variable        | Moran | Geary |
//! |-----|----------------------|-----------------|-------|-------|
//! | 1   | contiguity `V`       | centralized `y` | MI1   | GC1   |
//! | 2   | row-normalized `W*`  | population `z`  | MI2   | GC2   |
//! | 3   | global-normalized `W`| `z` / sample `z*` | MI3 | GC3   |
//!
//! Sets 1 and 3 are proportional unit by unit with a constant factor, so
//! their sums reproduce the global statistics. Set 2 differs from set 1 by
//! the per-unit factor `sigma^2 V_i`, which is why its sums do not.
//!
//! Every function takes the weights and the variable it is defined on, so
//! the pairing of weights with population or sample z-scores is fixed here
//! and cannot be mixed up by callers.

use serde::Serialize;

use crate::error::Result;
use crate::global::{check_dims, dot, squared_diff_sum};
use crate::matrices::{ContiguityMatrix, GlobalWeights, RowWeights};
use crate::numeric::rel_gap;
use crate::variables::TransformSet;

/// `I*_i = y_i sum_j v_ij y_j`
pub fn mi1(v: &ContiguityMatrix, t: &TransformSet) -> Result<Vec<f64>> {
    check_dims(v.n(), t.n())?;
    Ok((0..t.n()).map(|i| t.y[i] * dot(v.row(i), &t.y)).collect())
}

/// `I**_i = z_i sum_j w*_ij z_j`
pub fn mi2(wr: &RowWeights, t: &TransformSet) -> Result<Vec<f64>> {
    check_dims(wr.n(), t.n())?;
    Ok((0..t.n()).map(|i| t.z[i] * dot(wr.row(i), &t.z)).collect())
}

/// `I_i = z_i sum_j w_ij z_j`; sums to global Moran's I.
pub fn mi3(wg: &GlobalWeights, t: &TransformSet) -> Result<Vec<f64>> {
    check_dims(wg.n(), t.n())?;
    Ok((0..t.n()).map(|i| t.z[i] * dot(wg.row(i), &t.z)).collect())
}

/// `C*_i = sum_j v_ij (y_i - y_j)^2`
pub fn gc1(v: &ContiguityMatrix, t: &TransformSet) -> Result<Vec<f64>> {
    check_dims(v.n(), t.n())?;
    Ok((0..t.n())
        .map(|i| squared_diff_sum(v.row(i), &t.y, t.y[i]))
        .collect())
}

/// `C**_i = (1/sigma^2) sum_j w*_ij (y_i - y_j)^2`
pub fn gc2(wr: &RowWeights, t: &TransformSet) -> Result<Vec<f64>> {
    check_dims(wr.n(), t.n())?;
    Ok((0..t.n())
        .map(|i| squared_diff_sum(wr.row(i), &t.y, t.y[i]) / t.sigma2)
        .collect())
}

/// `C_i = 1/2 sum_j w_ij (z*_i - z*_j)^2`; sums to global Geary's C.
pub fn gc3(wg: &GlobalWeights, t: &TransformSet) -> Result<Vec<f64>> {
    check_dims(wg.n(), t.n())?;
    Ok((0..t.n())
        .map(|i| 0.5 * squared_diff_sum(wg.row(i), &t.zs, t.zs[i]))
        .collect())
}

/// Canonical local Geary from canonical local Moran:
/// `C_i = ((n-1)/2n) (sum_j w_ij (z_i^2 + z_j^2) - 2 I_i)`.
pub fn gc3_from_mi3(wg: &GlobalWeights, t: &TransformSet, mi3: &[f64]) -> Result<Vec<f64>> {
    check_dims(wg.n(), t.n())?;
    check_dims(t.n(), mi3.len())?;
    let n = t.n() as f64;
    let factor = (n - 1.0) / (2.0 * n);
    let z2: Vec<f64> = t.z.iter().map(|z| z * z).collect();
    Ok((0..t.n())
        .map(|i| {
            let row = wg.row(i);
            let quad = z2[i] * row.iter().sum::<f64>() + dot(row, &z2);
            factor * (quad - 2.0 * mi3[i])
        })
        .collect())
}

/// Canonical local Geary written with population z-scores:
/// `C_i = ((n-1)/2n) sum_j w_ij (z_i - z_j)^2`.
pub fn gc3_population_form(wg: &GlobalWeights, t: &TransformSet) -> Result<Vec<f64>> {
    check_dims(wg.n(), t.n())?;
    let n = t.n() as f64;
    let factor = (n - 1.0) / (2.0 * n);
    Ok((0..t.n())
        .map(|i| factor * squared_diff_sum(wg.row(i), &t.z, t.z[i]))
        .collect())
}

/// Per-unit and constant ratios between the three sets.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ratios {
    /// `sigma^2 V_i`: set 1 over set 2, for Moran and Geary alike.
    pub ratio12: Vec<f64>,
    /// `sigma^2 V0`: MI1 over MI3.
    pub ratio13: f64,
    /// `2 s^2 V0`: GC1 over GC3.
    pub gratio13: f64,
}

pub fn ratios(t: &TransformSet, v: &ContiguityMatrix) -> Ratios {
    Ratios {
        ratio12: v.row_sums().iter().map(|vi| t.sigma2 * vi).collect(),
        ratio13: t.sigma2 * v.total(),
        gratio13: 2.0 * t.s2 * v.total(),
    }
}

/// How closely one unit's observed set-1/set-2 ratios match `sigma^2 V_i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioAgreement {
    pub moran_gap: f64,
    pub geary_gap: f64,
    /// Cross-multiplied `mi1 * gc2` against `gc1 * mi2`.
    pub cross_gap: f64,
    /// False when a denominator was too small and the product form was used.
    pub division_form: bool,
}

/// Checks `mi1/mi2 = gc1/gc2 = sigma^2 V_i` for each unit.
///
/// Units whose set-2 value is below `1e-12 * sigma^2 V0` in magnitude are
/// compared in product form (`mi1` against `sigma^2 V_i * mi2`).
pub fn ratio12_agreement(lt: &LisaTable, t: &TransformSet, v: &ContiguityMatrix) -> Vec<RatioAgreement> {
    let cutoff = 1e-12 * t.sigma2 * v.total();
    (0..lt.len())
        .map(|i| {
            let expected = lt.ratio12[i];
            let use_division = lt.mi2[i].abs() >= cutoff && lt.gc2[i].abs() >= cutoff;
            let (moran_gap, geary_gap) = if use_division {
                (
                    rel_gap(lt.mi1[i] / lt.mi2[i], expected),
                    rel_gap(lt.gc1[i] / lt.gc2[i], expected),
                )
            } else {
                (
                    rel_gap(lt.mi1[i], expected * lt.mi2[i]),
                    rel_gap(lt.gc1[i], expected * lt.gc2[i]),
                )
            };
            RatioAgreement {
                moran_gap,
                geary_gap,
                cross_gap: rel_gap(lt.mi1[i] * lt.gc2[i], lt.gc1[i] * lt.mi2[i]),
                division_form: use_division,
            }
        })
        .collect()
}

/// All three sets of local statistics for one dataset, in input label order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LisaTable {
    pub labels: Vec<String>,
    pub mi1: Vec<f64>,
    pub mi2: Vec<f64>,
    pub mi3: Vec<f64>,
    pub gc1: Vec<f64>,
    pub gc2: Vec<f64>,
    pub gc3: Vec<f64>,
    pub ratio12: Vec<f64>,
    pub ratio13: f64,
    pub gratio13: f64,
}

impl LisaTable {
    pub fn compute(
        labels: &[String],
        v: &ContiguityMatrix,
        wg: &GlobalWeights,
        wr: &RowWeights,
        t: &TransformSet,
    ) -> Result<Self> {
        check_dims(labels.len(), t.n())?;
        let Ratios {
            ratio12,
            ratio13,
            gratio13,
        } = ratios(t, v);
        Ok(Self {
            labels: labels.to_vec(),
            mi1: mi1(v, t)?,
            mi2: mi2(wr, t)?,
            mi3: mi3(wg, t)?,
            gc1: gc1(v, t)?,
            gc2: gc2(wr, t)?,
            gc3: gc3(wg, t)?,
            ratio12,
            ratio13,
            gratio13,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}
