//! Brute-force reference for the Fuchs integral.
//!
//! Fixed-grid composite Simpson on `[1, t_max]` with compensated summation and
//! the analytic `∫ (t⁻³ − t⁻⁵) dt` tail beyond `t_max`. Shares no code with the
//! adaptive production path.

#![allow(dead_code)]

use num_complex::Complex64;

pub const ORACLE_PANELS: usize = 10_000_000;

fn integrand(t: f64, w: Complex64, p: f64) -> Complex64 {
    let e = (-w * t).exp();
    let weight = t.powi(-3) - t.powi(-5);
    (Complex64::new(1.0, 0.0) - e) / (Complex64::new(1.0, 0.0) - e * p) * weight
}

/// Upper cut for the oracle: `max(60, 45 / Re w)`, so `e^{-Re(w) t_max} <= e^{-45}`.
pub fn oracle_cut(w: Complex64) -> f64 {
    (45.0 / w.re).max(60.0)
}

#[derive(Default)]
struct Neumaier {
    sum: Complex64,
    comp: Complex64,
}

impl Neumaier {
    fn add(&mut self, x: Complex64) {
        self.sum.re = add_part(self.sum.re, x.re, &mut self.comp.re);
        self.sum.im = add_part(self.sum.im, x.im, &mut self.comp.im);
    }

    fn total(&self) -> Complex64 {
        self.sum + self.comp
    }
}

fn add_part(sum: f64, x: f64, comp: &mut f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}

/// `∫₁^∞ (t⁻³ − t⁻⁵)(1 − e^{−wt})/(1 − p e^{−wt}) dt` by Simpson with `panels` intervals.
pub fn fuchs_integral_simpson(w: Complex64, p: f64, panels: usize) -> Complex64 {
    assert!(panels.is_multiple_of(2));
    let a = 1.0;
    let b = oracle_cut(w);
    let h = (b - a) / panels as f64;
    let mut acc = Neumaier::default();
    acc.add(integrand(a, w, p));
    acc.add(integrand(b, w, p));
    for i in 1..panels {
        let t = a + h * i as f64;
        let coef = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc.add(integrand(t, w, p) * coef);
    }
    let tail = 1.0 / (2.0 * b * b) - 1.0 / (4.0 * b.powi(4));
    acc.total() * (h / 3.0) + tail
}

pub fn fuchs_integral_oracle(w: Complex64, p: f64) -> Complex64 {
    fuchs_integral_simpson(w, p, ORACLE_PANELS)
}

/// Row of `tests/data/fuchs_golden.csv`.
#[derive(Debug, Clone, Copy)]
pub struct GoldenRow {
    pub w: Complex64,
    pub p: f64,
    pub value: Complex64,
}

pub fn parse_golden(text: &str) -> Vec<GoldenRow> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .skip(1)
        .map(|l| {
            let f: Vec<f64> = l.split(',').map(|s| s.trim().parse().unwrap()).collect();
            GoldenRow {
                w: Complex64::new(f[0], f[1]),
                p: f[2],
                value: Complex64::new(f[3], f[4]),
            }
        })
        .collect()
}

pub const GOLDEN_CSV: &str = include_str!("../data/fuchs_golden.csv");
