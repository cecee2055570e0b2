//! Scatter data comparing the first set of local Moran indexes with the
//! second and third sets, plus a static SVG rendering.

use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::numeric::{fit_line, fit_through_origin, LinearFit};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatterPoint {
    pub label: String,
    pub mi1: f64,
    pub mi2: f64,
    pub mi3: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlotData {
    pub points: Vec<ScatterPoint>,
    /// MI2 against MI1, ordinary least squares.
    pub mi2_vs_mi1: LinearFit,
    /// MI3 against MI1, through the origin; slope equals `1 / gamma`.
    pub mi3_vs_mi1: LinearFit,
    pub inverse_gamma: f64,
}

pub fn plot_data(a: &Analysis) -> PlotData {
    let lt = &a.lisa;
    let points = (0..lt.len())
        .map(|i| ScatterPoint {
            label: lt.labels[i].clone(),
            mi1: lt.mi1[i],
            mi2: lt.mi2[i],
            mi3: lt.mi3[i],
        })
        .collect();
    PlotData {
        points,
        mi2_vs_mi1: fit_line(&lt.mi1, &lt.mi2),
        mi3_vs_mi1: fit_through_origin(&lt.mi1, &lt.mi3),
        inverse_gamma: 1.0 / a.gamma(),
    }
}

impl PlotData {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,MI1,MI2,MI3,MI2_fit,MI3_fit\n");
        for p in &self.points {
            let f2 = self.mi2_vs_mi1.intercept + self.mi2_vs_mi1.slope * p.mi1;
            let f3 = self.mi3_vs_mi1.slope * p.mi1;
            let _ = writeln!(out, "{},{},{},{},{},{}", p.label, p.mi1, p.mi2, p.mi3, f2, f3);
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plot data serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self, precision: usize) -> String {
        let p = precision;
        let mut out = String::new();
        let f = &self.mi2_vs_mi1;
        let _ = writeln!(
            out,
            "MI2 vs MI1: slope = {:.3e}, intercept = {:.p$}, R^2 = {:.p$}, max |residual| = {:.p$}",
            f.slope, f.intercept, f.r_squared, f.max_abs_residual
        );
        let f = &self.mi3_vs_mi1;
        let _ = writeln!(
            out,
            "MI3 vs MI1: slope = {:.9} (1/gamma = {:.9}), R^2 = {:.p$}, max |residual| = {:.3e}",
            f.slope, self.inverse_gamma, f.r_squared, f.max_abs_residual
        );
        out
    }

    /// Two side-by-side scatter panels with their fitted lines.
    pub fn to_svg(&self) -> String {
        const PANEL: f64 = 360.0;
        const MARGIN: f64 = 50.0;
        let width = 2.0 * (PANEL + 2.0 * MARGIN);
        let height = PANEL + 2.0 * MARGIN;
        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">"#
        );
        svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

        let x: Vec<f64> = self.points.iter().map(|p| p.mi1).collect();
        let panels = [
            ("(a) MI2 vs MI1", self.points.iter().map(|p| p.mi2).collect::<Vec<_>>(), &self.mi2_vs_mi1),
            ("(b) MI3 vs MI1", self.points.iter().map(|p| p.mi3).collect::<Vec<_>>(), &self.mi3_vs_mi1),
        ];
        for (k, (title, y, fit)) in panels.iter().enumerate() {
            let ox = k as f64 * (PANEL + 2.0 * MARGIN) + MARGIN;
            let oy = MARGIN;
            let (x0, x1) = bounds(&x);
            let (y0, y1) = bounds(y);
            let sx = |v: f64| ox + (v - x0) / (x1 - x0) * PANEL;
            let sy = |v: f64| oy + PANEL - (v - y0) / (y1 - y0) * PANEL;

            let _ = writeln!(
                svg,
                r#"<rect x="{ox}" y="{oy}" width="{PANEL}" height="{PANEL}" fill="none" stroke="black"/>"#
            );
            let _ = writeln!(svg, r#"<text x="{}" y="{}" text-anchor="middle">{title}</text>"#, ox + PANEL / 2.0, oy - 15.0);
            let _ = writeln!(svg, r#"<text x="{}" y="{}" text-anchor="middle">MI1</text>"#, ox + PANEL / 2.0, oy + PANEL + 35.0);
            for (v, anchor) in [(x0, "start"), (x1, "end")] {
                let _ = writeln!(svg, r#"<text x="{:.2}" y="{}" text-anchor="{anchor}">{}</text>"#, sx(v), oy + PANEL + 15.0, tick(v));
            }
            for v in [y0, y1] {
                let _ = writeln!(svg, r#"<text x="{}" y="{:.2}" text-anchor="end">{}</text>"#, ox - 4.0, sy(v) + 4.0, tick(v));
            }

            let (fx0, fx1) = (fit.intercept + fit.slope * x0, fit.intercept + fit.slope * x1);
            let _ = writeln!(
                svg,
                r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#c0392b" stroke-dasharray="4 3"/>"##,
                sx(x0),
                sy(fx0),
                sx(x1),
                sy(fx1)
            );
            for (xv, yv) in x.iter().zip(y) {
                let _ = writeln!(svg, r##"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="#2c3e50"/>"##, sx(*xv), sy(*yv));
            }
            let _ = writeln!(
                svg,
                r#"<text x="{}" y="{}">y = {:.4e} x + {:.4e}, R² = {:.6}</text>"#,
                ox + 6.0,
                oy + 14.0,
                fit.slope,
                fit.intercept,
                fit.r_squared
            );
        }
        svg.push_str("</svg>\n");
        svg
    }
}

fn bounds(v: &[f64]) -> (f64, f64) {
    let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let pad = if hi > lo { 0.05 * (hi - lo) } else { 1.0 };
    (lo - pad, hi + pad)
}

fn tick(v: f64) -> String {
    if v != 0.0 && (v.abs() < 1e-2 || v.abs() >= 1e5) {
        format!("{v:.2e}")
    } else {
        format!("{v:.3}")
    }
}
