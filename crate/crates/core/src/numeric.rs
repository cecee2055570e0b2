/// `|a - b| / max(|a|, |b|)`, zero when both are zero.
pub fn rel_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Relative gap against an explicit magnitude floor.
///
/// Sums whose terms cancel can end up far smaller than the terms; comparing
/// two such sums is only meaningful relative to the size of what was summed.
pub fn rel_gap_scaled(a: f64, b: f64, magnitude: f64) -> f64 {
    let scale = a.abs().max(b.abs()).max(magnitude.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

pub fn sum(xs: &[f64]) -> f64 {
    xs.iter().sum()
}

pub fn abs_sum(xs: &[f64]) -> f64 {
    xs.iter().map(|x| x.abs()).sum()
}

/// Least-squares line `y = intercept + slope * x`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub max_abs_residual: f64,
}

/// Ordinary least squares with intercept.
pub fn fit_line(x: &[f64], y: &[f64]) -> LinearFit {
    let n = x.len() as f64;
    let mx = sum(x) / n;
    let my = sum(y) / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    finish_fit(x, y, slope, intercept)
}

/// Least squares constrained through the origin.
pub fn fit_through_origin(x: &[f64], y: &[f64]) -> LinearFit {
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let sxx: f64 = x.iter().map(|a| a * a).sum();
    finish_fit(x, y, sxy / sxx, 0.0)
}

fn finish_fit(x: &[f64], y: &[f64], slope: f64, intercept: f64) -> LinearFit {
    let my = sum(y) / y.len() as f64;
    let mut ss_res = 0.0;
    let mut ss_tot = 0.0;
    let mut max_abs_residual = 0.0_f64;
    for (a, b) in x.iter().zip(y) {
        let r = b - (intercept + slope * a);
        ss_res += r * r;
        ss_tot += (b - my) * (b - my);
        max_abs_residual = max_abs_residual.max(r.abs());
    }
    let r_squared = if ss_tot > 0.0 { 1.0 - ss_res / ss_tot } else { 1.0 };
    LinearFit {
        slope,
        intercept,
        r_squared,
        max_abs_residual,
    }
}
