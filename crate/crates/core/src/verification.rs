//! Numerical checks of the sum and ratio relations between the LISA sets.
//!
//! Two reports are produced. The identity suite evaluates relations that are
//! exact algebra and must hold on every dataset; a failure there is a bug.
//! The refutation audit evaluates the two relations claimed for the
//! row-normalized set (sum of MI2 equal to `n I`, sum of GC2 equal to
//! `2n^2 C/(n-1)`), which fail on generic data, alongside the relations that
//! actually hold for that set.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{Analysis, Dataset};
use crate::error::{Error, Result};
use crate::global::{dot, squared_diff_sum, weighted_z2_sum};
use crate::lisa::{gc3_from_mi3, ratio12_agreement};
use crate::matrices::{DistanceMatrix, Kernel};
use crate::numeric::{abs_sum, rel_gap, rel_gap_scaled, sum};
use crate::variables::{transform, AttributeVector};

/// Single-expression identities.
pub const SINGLE_TOLERANCE: f64 = 1e-9;
/// Identities that multiply several separately computed quantities.
pub const CHAINED_TOLERANCE: f64 = 1e-6;
/// Pure coefficient algebra.
pub const COEFFICIENT_TOLERANCE: f64 = 1e-12;
/// A refuted claim must miss by more than this (relative).
pub const REFUTATION_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Identity,
    RefutedClaim,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    IdentityHolds,
    ClaimRefutedAsExpected,
    Unexpected,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: &'static str,
    pub relation: &'static str,
    pub kind: CheckKind,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_gap: f64,
    pub rel_gap: f64,
    pub tolerance: f64,
    pub chained: bool,
    /// Worst unit for per-unit checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    pub verdict: Verdict,
}

impl CheckRecord {
    fn identity(id: &'static str, relation: &'static str, lhs: f64, rhs: f64, rel: f64, tolerance: f64) -> Self {
        let verdict = if rel <= tolerance {
            Verdict::IdentityHolds
        } else {
            Verdict::Unexpected
        };
        Self {
            id,
            relation,
            kind: CheckKind::Identity,
            lhs,
            rhs,
            abs_gap: (lhs - rhs).abs(),
            rel_gap: rel,
            tolerance,
            chained: tolerance == CHAINED_TOLERANCE,
            unit: None,
            verdict,
        }
    }

    fn refuted(id: &'static str, relation: &'static str, lhs: f64, rhs: f64) -> Self {
        let rel = rel_gap(lhs, rhs);
        let verdict = if rel > REFUTATION_THRESHOLD {
            Verdict::ClaimRefutedAsExpected
        } else {
            Verdict::Unexpected
        };
        Self {
            id,
            relation,
            kind: CheckKind::RefutedClaim,
            lhs,
            rhs,
            abs_gap: (lhs - rhs).abs(),
            rel_gap: rel,
            tolerance: REFUTATION_THRESHOLD,
            chained: false,
            unit: None,
            verdict,
        }
    }

    fn at_unit(mut self, unit: &str) -> Self {
        self.unit = Some(unit.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Unexpected
    }
}

/// Scalars the checks are built from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReportContext {
    pub n: usize,
    pub v0: f64,
    pub sigma2: f64,
    pub s2: f64,
    /// `sigma^2 V0`
    pub gamma: f64,
    /// `2 n V0 / (n - 1)`
    pub gamma_c: f64,
    /// Data-dependent factor linking the GC2 sum to `C`.
    pub gamma_c_row: f64,
    pub moran_i: f64,
    pub geary_c: f64,
}

impl ReportContext {
    fn from_analysis(a: &Analysis) -> Self {
        Self {
            n: a.n(),
            v0: a.v0(),
            sigma2: a.transforms.sigma2,
            s2: a.transforms.s2,
            gamma: a.gamma(),
            gamma_c: a.gamma_c(),
            gamma_c_row: row_geary_coefficient(a),
            moran_i: a.globals.moran_i,
            geary_c: a.globals.geary_c,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub context: ReportContext,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn identities_hold(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.kind == CheckKind::Identity)
            .all(CheckRecord::passed)
    }

    pub fn claims_refuted(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.kind == CheckKind::RefutedClaim)
            .all(CheckRecord::passed)
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Appends the other report's checks, skipping ids already present.
    pub fn merge(mut self, other: VerificationReport) -> Self {
        for c in other.checks {
            if self.check(c.id).is_none() {
                self.checks.push(c);
            }
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self, precision: usize) -> String {
        let c = &self.context;
        let p = precision;
        let mut out = String::new();
        let _ = writeln!(out, "n = {}, V0 = {:.p$}, sigma^2 = {:.p$}, s^2 = {:.p$}", c.n, c.v0, c.sigma2, c.s2);
        let _ = writeln!(
            out,
            "gamma = {:.p$}, gamma_c = {:.p$}, gamma_c(row) = {:.p$}, I = {:.p$}, C = {:.p$}",
            c.gamma, c.gamma_c, c.gamma_c_row, c.moran_i, c.geary_c
        );
        for r in &self.checks {
            let verdict = match r.verdict {
                Verdict::IdentityHolds => "HOLDS",
                Verdict::ClaimRefutedAsExpected => "REFUTED",
                Verdict::Unexpected => "UNEXPECTED",
            };
            let _ = write!(
                out,
                "[{verdict:>10}] {:<28} {:<40} lhs = {:.p$}  rhs = {:.p$}  gap = {:.3e} (rel {:.3e})",
                r.id, r.relation, r.lhs, r.rhs, r.abs_gap, r.rel_gap
            );
            if let Some(unit) = &r.unit {
                let _ = write!(out, "  worst unit: {unit}");
            }
            out.push('\n');
        }
        out
    }
}

/// `(2n/(n-1)) * sum w*_ij (z*_i - z*_j)^2 / sum w_ij (z*_i - z*_j)^2`
pub fn row_geary_coefficient(a: &Analysis) -> f64 {
    let t = &a.transforms;
    let n = a.n() as f64;
    let row: f64 = (0..a.n())
        .map(|i| squared_diff_sum(a.row_weights.row(i), &t.zs, t.zs[i]))
        .sum();
    let global: f64 = (0..a.n())
        .map(|i| squared_diff_sum(a.global_weights.row(i), &t.zs, t.zs[i]))
        .sum();
    2.0 * n / (n - 1.0) * row / global
}

/// Largest relative gap between two equal-length vectors, with its index.
fn worst_unit(lhs: &[f64], rhs: &[f64]) -> (usize, f64) {
    lhs.iter()
        .zip(rhs)
        .map(|(a, b)| rel_gap(*a, *b))
        .enumerate()
        .fold((0, 0.0), |best, (i, g)| if g > best.1 { (i, g) } else { best })
}

fn per_unit_check(
    id: &'static str,
    relation: &'static str,
    labels: &[String],
    lhs: &[f64],
    rhs: &[f64],
) -> CheckRecord {
    let (i, gap) = worst_unit(lhs, rhs);
    CheckRecord::identity(id, relation, lhs[i], rhs[i], gap, SINGLE_TOLERANCE).at_unit(&labels[i])
}

pub fn identity_suite(a: &Analysis) -> Result<VerificationReport> {
    let lt = &a.lisa;
    let t = &a.transforms;
    let g = &a.globals;
    let n = a.n() as f64;
    let mut checks = Vec::with_capacity(10);

    let lhs = sum(&lt.mi1);
    let rhs = a.gamma() * g.moran_i;
    checks.push(CheckRecord::identity(
        "mi1_sum_global",
        "sum(MI1) = sigma^2 V0 I",
        lhs,
        rhs,
        rel_gap_scaled(lhs, rhs, abs_sum(&lt.mi1)),
        CHAINED_TOLERANCE,
    ));

    let lhs = sum(&lt.gc1);
    let rhs = a.gamma_c() * t.sigma2 * g.geary_c;
    checks.push(CheckRecord::identity(
        "gc1_sum_global",
        "sum(GC1) = gamma_c sigma^2 C",
        lhs,
        rhs,
        rel_gap(lhs, rhs),
        CHAINED_TOLERANCE,
    ));

    let lhs = sum(&lt.mi3);
    checks.push(CheckRecord::identity(
        "mi3_sum_global",
        "sum(MI3) = I",
        lhs,
        g.moran_i,
        rel_gap_scaled(lhs, g.moran_i, abs_sum(&lt.mi3)),
        SINGLE_TOLERANCE,
    ));

    let lhs = sum(&lt.gc3);
    checks.push(CheckRecord::identity(
        "gc3_sum_global",
        "sum(GC3) = C",
        lhs,
        g.geary_c,
        rel_gap(lhs, g.geary_c),
        SINGLE_TOLERANCE,
    ));

    let scaled: Vec<f64> = lt.mi3.iter().map(|m| lt.ratio13 * m).collect();
    checks.push(per_unit_check(
        "mi1_mi3_proportional",
        "MI1_i = sigma^2 V0 MI3_i",
        &lt.labels,
        &lt.mi1,
        &scaled,
    ));

    let scaled: Vec<f64> = lt.gc3.iter().map(|c| lt.gratio13 * c).collect();
    checks.push(per_unit_check(
        "gc1_gc3_proportional",
        "GC1_i = 2 s^2 V0 GC3_i",
        &lt.labels,
        &lt.gc1,
        &scaled,
    ));

    let agreement = ratio12_agreement(lt, t, &a.contiguity);
    let (worst, gap) = agreement
        .iter()
        .map(|r| r.moran_gap.max(r.geary_gap).max(r.cross_gap))
        .enumerate()
        .fold((0, 0.0), |best, (i, g)| if g > best.1 { (i, g) } else { best });
    let cross_lhs = lt.mi1[worst] * lt.gc2[worst];
    let cross_rhs = lt.gc1[worst] * lt.mi2[worst];
    checks.push(
        CheckRecord::identity(
            "set12_ratio",
            "MI1/MI2 = GC1/GC2 = sigma^2 V_i",
            cross_lhs,
            cross_rhs,
            gap,
            SINGLE_TOLERANCE,
        )
        .at_unit(&lt.labels[worst]),
    );

    let z2w = weighted_z2_sum(&a.global_weights, t)?;
    let rhs = (n - 1.0) / n * (z2w - g.moran_i);
    checks.push(CheckRecord::identity(
        "moran_geary_global",
        "C = ((n-1)/n)(o'Wz^2 - I)",
        g.geary_c,
        rhs,
        rel_gap_scaled(g.geary_c, rhs, z2w),
        SINGLE_TOLERANCE,
    ));

    let converted = gc3_from_mi3(&a.global_weights, t, &lt.mi3)?;
    checks.push(per_unit_check(
        "moran_geary_local",
        "GC3_i = ((n-1)/2n)(sum w(z_i^2+z_j^2) - 2 MI3_i)",
        &lt.labels,
        &lt.gc3,
        &converted,
    ));

    checks.push(row_geary_check(a));

    Ok(VerificationReport {
        context: ReportContext::from_analysis(a),
        checks,
    })
}

fn row_geary_check(a: &Analysis) -> CheckRecord {
    let lhs = sum(&a.lisa.gc2);
    let rhs = row_geary_coefficient(a) * a.globals.geary_c;
    CheckRecord::identity(
        "gc2_sum_row_coefficient",
        "sum(GC2) = gamma_c(row) C",
        lhs,
        rhs,
        rel_gap(lhs, rhs),
        CHAINED_TOLERANCE,
    )
}

pub fn refutation_audit(a: &Analysis) -> Result<VerificationReport> {
    let lt = &a.lisa;
    let t = &a.transforms;
    let g = &a.globals;
    let n = a.n() as f64;
    let mut checks = Vec::with_capacity(5);

    checks.push(CheckRecord::refuted(
        "mi2_sum_n_times_i",
        "sum(MI2) = n I  (claimed)",
        sum(&lt.mi2),
        n * g.moran_i,
    ));

    checks.push(CheckRecord::refuted(
        "gc2_sum_fixed_coefficient",
        "sum(GC2) = 2n^2 C/(n-1)  (claimed)",
        sum(&lt.gc2),
        2.0 * n * n * g.geary_c / (n - 1.0),
    ));

    checks.push(row_geary_check(a));

    let row_quad: f64 = (0..a.n())
        .map(|i| t.z[i] * dot(a.row_weights.row(i), &t.z))
        .sum();
    let global_quad: f64 = (0..a.n())
        .map(|i| t.z[i] * dot(a.global_weights.row(i), &t.z))
        .sum();
    let lhs = sum(&lt.mi2);
    let rhs = row_quad / global_quad * g.moran_i;
    checks.push(CheckRecord::identity(
        "mi2_sum_weight_ratio",
        "sum(MI2) = (z'W*z / z'Wz) I",
        lhs,
        rhs,
        rel_gap_scaled(lhs, rhs, abs_sum(&lt.mi2)),
        SINGLE_TOLERANCE,
    ));

    let lhs = a.gamma_c() * t.sigma2;
    let rhs = 2.0 * t.s2 * a.v0();
    checks.push(CheckRecord::identity(
        "coefficient_relation",
        "gamma_c sigma^2 = 2 s^2 V0",
        lhs,
        rhs,
        rel_gap(lhs, rhs),
        COEFFICIENT_TOLERANCE,
    ));

    Ok(VerificationReport {
        context: ReportContext::from_analysis(a),
        checks,
    })
}

pub fn run_identity_suite(dataset: &Dataset) -> Result<VerificationReport> {
    identity_suite(&Analysis::run(dataset)?)
}

pub fn run_refutation_audit(dataset: &Dataset) -> Result<VerificationReport> {
    refutation_audit(&Analysis::run(dataset)?)
}

/// Identity suite followed by the audit, as one report.
pub fn full_report(a: &Analysis) -> Result<VerificationReport> {
    Ok(identity_suite(a)?.merge(refutation_audit(a)?))
}

/// Deterministic synthetic dataset with `n >= 3` units.
///
/// Distances are uniform on `[1, 100]` and mirrored across the diagonal;
/// values are uniform on `[1, 1000]`. Uses the inverse-distance kernel.
pub fn random_instance(n: usize, seed: u64) -> Result<Dataset> {
    if n < 3 {
        return Err(Error::TooFewUnits(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (1..=n).map(|i| format!("unit{i}")).collect();

    let mut rows = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = rng.gen_range(1.0..=100.0);
            rows[i][j] = d;
            rows[j][i] = d;
        }
    }
    let distances = DistanceMatrix::new(labels.clone(), rows)?;

    let values = loop {
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(1.0..=1000.0)).collect();
        let candidate = AttributeVector::new(labels.clone(), x)?;
        if transform(&candidate).is_ok() {
            break candidate;
        }
    };

    Dataset::new(format!("random(n={n}, seed={seed})"), distances, values, Kernel::InverseDistance)
}
