//! Deliberately naive reference implementation: explicit double loops over
//! the defining formulas, no shared helpers, no algebraic shortcuts. It does
//! not call into the library.
#![allow(dead_code)]

pub struct OracleResult {
    pub v0: f64,
    pub row_sums: Vec<f64>,
    pub sigma2: f64,
    pub s2: f64,
    pub moran_i: f64,
    pub geary_c: f64,
    pub mi1: Vec<f64>,
    pub mi2: Vec<f64>,
    pub mi3: Vec<f64>,
    pub gc1: Vec<f64>,
    pub gc2: Vec<f64>,
    pub gc3: Vec<f64>,
}

pub enum OracleKernel {
    Inverse,
    Power(f64),
}

pub fn evaluate(d: &[Vec<f64>], x: &[f64], kernel: OracleKernel) -> OracleResult {
    let n = x.len();

    let mut v = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                v[i][j] = match kernel {
                    OracleKernel::Inverse => 1.0 / d[i][j],
                    OracleKernel::Power(b) => 1.0 / d[i][j].powf(b),
                };
            }
        }
    }
    let mut v0 = 0.0;
    let mut row_sums = vec![0.0; n];
    for i in 0..n {
        for j in 0..n {
            v0 += v[i][j];
            row_sums[i] += v[i][j];
        }
    }

    let mut mean = 0.0;
    for i in 0..n {
        mean += x[i];
    }
    mean /= n as f64;
    let mut y = vec![0.0; n];
    let mut ss = 0.0;
    for i in 0..n {
        y[i] = x[i] - mean;
        ss += y[i] * y[i];
    }
    let sigma2 = ss / n as f64;
    let s2 = ss / (n as f64 - 1.0);
    let mut z = vec![0.0; n];
    let mut zs = vec![0.0; n];
    for i in 0..n {
        z[i] = y[i] / sigma2.sqrt();
        zs[i] = y[i] / s2.sqrt();
    }

    let mut mi1 = vec![0.0; n];
    let mut mi2 = vec![0.0; n];
    let mut mi3 = vec![0.0; n];
    let mut gc1 = vec![0.0; n];
    let mut gc2 = vec![0.0; n];
    let mut gc3 = vec![0.0; n];
    let mut moran_i = 0.0;
    let mut geary_c = 0.0;
    for i in 0..n {
        for j in 0..n {
            let w = v[i][j] / v0;
            let w_row = v[i][j] / row_sums[i];
            mi1[i] += y[i] * v[i][j] * y[j];
            mi2[i] += y[i] * w_row * y[j] / sigma2;
            mi3[i] += z[i] * w * z[j];
            gc1[i] += v[i][j] * (y[i] - y[j]) * (y[i] - y[j]);
            gc2[i] += w_row * (y[i] - y[j]) * (y[i] - y[j]) / sigma2;
            gc3[i] += 0.5 * w * (zs[i] - zs[j]) * (zs[i] - zs[j]);
            moran_i += w * z[i] * z[j];
            geary_c += 0.5 * w * (zs[i] - zs[j]) * (zs[i] - zs[j]);
        }
    }

    OracleResult {
        v0,
        row_sums,
        sigma2,
        s2,
        moran_i,
        geary_c,
        mi1,
        mi2,
        mi3,
        gc1,
        gc2,
        gc3,
    }
}

/// `|a - b| <= tol * max(|a|, |b|, floor)`
pub fn close(a: f64, b: f64, tol: f64, floor: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(floor)
}
