//! The Fuchs–Sondheimer integral
//!
//! ```text
//! I(w, p) = ∫₁^∞ (t⁻³ − t⁻⁵) (1 − e^{−wt}) / (1 − p e^{−wt}) dt,   Re w > 0, 0 ≤ p < 1
//! ```
//!
//! evaluated by global adaptive Gauss–Kronrod (7/15) on `[1, t_cut]` plus the
//! closed-form tail `∫_{t_cut}^∞ (t⁻³ − t⁻⁵) dt`. Beyond `t_cut` the exponential
//! ratio differs from 1 by at most `e^{−Re(w) t_cut} (1 + p)/(1 − p)`, and `t_cut`
//! is chosen so that this is below `rel_tol / 10`.

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default relative tolerance for the integral.
pub const DEFAULT_REL_TOL: f64 = 1e-10;

/// Accepted range for `rel_tol`.
pub const MIN_REL_TOL: f64 = 1e-14;
pub const MAX_REL_TOL: f64 = 1e-4;

/// Smallest accepted Re(w).
pub const MIN_RE_W: f64 = 1e-6;

/// Integrand evaluation budget per integral.
pub const MAX_EVALUATIONS: usize = 1_000_000;

thread_local! {
    static INVOCATIONS: Cell<u64> = const { Cell::new(0) };
}

/// Number of `fuchs_integral` calls made on the current thread.
pub fn invocation_count() -> u64 {
    INVOCATIONS.with(Cell::get)
}

/// Parameters of one Fuchs integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuchsIntegralSpec {
    pub w: Complex64,
    pub p: f64,
    pub rel_tol: f64,
}

impl FuchsIntegralSpec {
    pub fn new(w: Complex64, p: f64) -> Self {
        Self {
            w,
            p,
            rel_tol: DEFAULT_REL_TOL,
        }
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.w.re.is_finite() && self.w.im.is_finite()) || self.w.re <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "Re(w)",
                value: self.w.re,
                expected: "Re(w) > 0",
            });
        }
        if self.w.re < MIN_RE_W {
            return Err(Error::InvalidParameter {
                name: "Re(w)",
                value: self.w.re,
                expected: "Re(w) >= 1e-6 (validated range)",
            });
        }
        if !(0.0..1.0).contains(&self.p) {
            return Err(Error::InvalidParameter {
                name: "p",
                value: self.p,
                expected: "0 <= p < 1",
            });
        }
        validate_rel_tol(self.rel_tol)
    }

    /// Upper end of the numerically integrated range.
    pub fn cutoff(&self) -> f64 {
        let ratio = (1.0 + self.p) / (1.0 - self.p);
        let t = (10.0 * ratio / self.rel_tol).ln() / self.w.re;
        t.max(2.0)
    }
}

pub(crate) fn validate_rel_tol(rel_tol: f64) -> Result<()> {
    if (MIN_REL_TOL..=MAX_REL_TOL).contains(&rel_tol) {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "rel_tol",
            value: rel_tol,
            expected: "1e-14 <= rel_tol <= 1e-4",
        })
    }
}

/// Tail `∫_{t}^∞ (t⁻³ − t⁻⁵) dt`.
fn power_tail(t: f64) -> f64 {
    let t2 = t * t;
    1.0 / (2.0 * t2) - 1.0 / (4.0 * t2 * t2)
}

struct Integrand {
    w: Complex64,
    p: f64,
}

impl Integrand {
    fn eval(&self, t: f64) -> Complex64 {
        let e = (-self.w * t).exp();
        let t2 = t * t;
        let t3 = t2 * t;
        let weight = (1.0 - 1.0 / t2) / t3;
        (1.0 - e) / (1.0 - self.p * e) * weight
    }
}

// Gauss–Kronrod 7/15 abscissae and weights (QUADPACK qk15).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
    // creation order; makes heap pops deterministic when errors tie
    seq: u64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

fn gauss_kronrod(f: &Integrand, a: f64, b: f64) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut values = [Complex64::new(0.0, 0.0); 15];
    values[7] = f.eval(center);
    for (j, &x) in XGK.iter().take(7).enumerate() {
        let dx = half * x;
        values[j] = f.eval(center - dx);
        values[14 - j] = f.eval(center + dx);
    }

    let mut kronrod = values[7] * WGK[7];
    let mut gauss = values[7] * WG[3];
    for j in 0..7 {
        let sum = values[j] + values[14 - j];
        kronrod += sum * WGK[j];
        if j % 2 == 1 {
            gauss += sum * WG[j / 2];
        }
    }

    // QUADPACK error scaling: |K − G| overstates the error of the Kronrod
    // result; `spread` approximates ∫|f − mean|.
    let mean = kronrod * 0.5;
    let mut spread = WGK[7] * (values[7] - mean).norm();
    let mut magnitude = WGK[7] * values[7].norm();
    for j in 0..7 {
        spread += WGK[j] * ((values[j] - mean).norm() + (values[14 - j] - mean).norm());
        magnitude += WGK[j] * (values[j].norm() + values[14 - j].norm());
    }
    let abs_half = half.abs();
    spread *= abs_half;
    magnitude *= abs_half;

    let mut error = ((kronrod - gauss) * half).norm();
    if spread != 0.0 && error != 0.0 {
        error = spread * (200.0 * error / spread).powf(1.5).min(1.0);
    }
    if magnitude > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * magnitude);
    }
    (kronrod * half, error)
}

/// Outcome of one adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integration {
    pub value: Complex64,
    /// Estimated relative error of the quadrature part.
    pub estimated_error: f64,
    pub evaluations: usize,
    pub cutoff: f64,
}

/// Evaluates `I(w, p)` to relative accuracy `spec.rel_tol`.
pub fn fuchs_integral(spec: &FuchsIntegralSpec) -> Result<Complex64> {
    integrate(spec).map(|r| r.value)
}

/// [`fuchs_integral`] with convergence diagnostics.
pub fn integrate(spec: &FuchsIntegralSpec) -> Result<Integration> {
    spec.validate()?;
    INVOCATIONS.with(|c| c.set(c.get() + 1));

    let f = Integrand { w: spec.w, p: spec.p };
    let cut = spec.cutoff();

    // Octave breakpoints 1, 2, 4, ... follow the t⁻³ decay.
    let mut edges = vec![1.0];
    let mut x = 2.0;
    while x < cut {
        edges.push(x);
        x *= 2.0;
    }
    edges.push(cut);

    let mut heap = BinaryHeap::new();
    let mut seq = 0u64;
    let mut evaluations = 0usize;
    let mut total = Complex64::new(0.0, 0.0);
    let mut total_error = 0.0;
    for pair in edges.windows(2) {
        let (value, error) = gauss_kronrod(&f, pair[0], pair[1]);
        evaluations += 15;
        total += value;
        total_error += error;
        heap.push(Segment {
            a: pair[0],
            b: pair[1],
            value,
            error,
            seq,
        });
        seq += 1;
    }

    // The truncated tail is accounted for separately (≤ rel_tol / 10 of the
    // tail), so the quadrature gets half the budget.
    let target = |total: Complex64| 0.5 * spec.rel_tol * (total + power_tail(cut)).norm();
    while total_error > target(total) {
        if evaluations + 30 > MAX_EVALUATIONS {
            return Err(Error::NonConvergence {
                evaluations,
                estimated_error: total_error / (total + power_tail(cut)).norm(),
            });
        }
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval exhausted at f64 resolution
            return Err(Error::NonConvergence {
                evaluations,
                estimated_error: total_error / (total + power_tail(cut)).norm(),
            });
        }
        let (lv, le) = gauss_kronrod(&f, worst.a, mid);
        let (rv, re) = gauss_kronrod(&f, mid, worst.b);
        evaluations += 30;
        total += lv + rv - worst.value;
        total_error += le + re - worst.error;
        for (a, b, value, error) in [(worst.a, mid, lv, le), (mid, worst.b, rv, re)] {
            heap.push(Segment {
                a,
                b,
                value,
                error,
                seq,
            });
            seq += 1;
        }
    }

    // Re-sum from the segments in a fixed order to shed the drift of the
    // running update.
    let mut segments = heap.into_vec();
    segments.sort_by(|x, y| x.a.total_cmp(&y.a));
    let integral: Complex64 = segments.iter().map(|s| s.value).sum::<Complex64>() + power_tail(cut);
    Ok(Integration {
        value: integral,
        estimated_error: total_error / integral.norm(),
        evaluations,
        cutoff: cut,
    })
}

/// `1/Φ(w) = 1/w − 3(1 − p)/(2w²) · I(w, p)`; exactly `1/w` for `p = 1`.
pub fn phi_inverse(w: Complex64, p: f64, rel_tol: f64) -> Result<Complex64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter {
            name: "p",
            value: p,
            expected: "0 <= p <= 1",
        });
    }
    let inv_w = w.inv();
    if p == 1.0 {
        if w.re <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "Re(w)",
                value: w.re,
                expected: "Re(w) > 0",
            });
        }
        return Ok(inv_w);
    }
    let integral = fuchs_integral(&FuchsIntegralSpec { w, p, rel_tol })?;
    Ok(inv_w - inv_w * inv_w * (1.5 * (1.0 - p)) * integral)
}
