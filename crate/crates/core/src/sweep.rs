//! Frequency sweeps over curve families of d, θ or p.

use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::coefficients::evaluate_with_tol;
use crate::error::{Error, Result};
use crate::impedance::ModelVariant;
use crate::params::{FilmConfig, MaterialParams, WaveConfig};
use crate::quadrature::{self, DEFAULT_REL_TOL};

/// Linear ω grid, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaGrid {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl OmegaGrid {
    pub fn new(min: f64, max: f64, count: usize) -> Result<Self> {
        let grid = Self { min, max, count };
        grid.validate()?;
        Ok(grid)
    }

    fn validate(&self) -> Result<()> {
        if self.count < 2 {
            return Err(Error::InvalidSweep(format!(
                "omega grid needs at least 2 points, got {}",
                self.count
            )));
        }
        if !(self.min.is_finite() && self.max.is_finite()) || self.min < 0.0 || self.min >= self.max {
            return Err(Error::InvalidSweep(format!(
                "omega grid requires 0 <= min < max, got [{}, {}]",
                self.min, self.max
            )));
        }
        Ok(())
    }

    pub fn value(&self, i: usize) -> f64 {
        if i + 1 == self.count {
            return self.max;
        }
        self.min + (self.max - self.min) * (i as f64 / (self.count - 1) as f64)
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.value(i)).collect()
    }
}

/// A scalar parameter or a list of values, one curve each.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamValues {
    Fixed(f64),
    Family(Vec<f64>),
}

impl ParamValues {
    fn values(&self) -> &[f64] {
        match self {
            ParamValues::Fixed(v) => std::slice::from_ref(v),
            ParamValues::Family(vs) => vs,
        }
    }

    fn is_family(&self) -> bool {
        matches!(self, ParamValues::Family(_))
    }
}

impl From<f64> for ParamValues {
    fn from(v: f64) -> Self {
        ParamValues::Fixed(v)
    }
}

impl From<Vec<f64>> for ParamValues {
    fn from(vs: Vec<f64>) -> Self {
        ParamValues::Family(vs)
    }
}

/// The parameter that labels the curves of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyParam {
    Thickness,
    Angle,
    Specularity,
}

impl FamilyParam {
    pub fn name(self) -> &'static str {
        match self {
            FamilyParam::Thickness => "d",
            FamilyParam::Angle => "theta",
            FamilyParam::Specularity => "p",
        }
    }
}

impl fmt::Display for FamilyParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub material: MaterialParams,
    pub variant: ModelVariant,
    pub omega: OmegaGrid,
    pub d: ParamValues,
    pub theta: ParamValues,
    pub p: ParamValues,
    pub g: Complex64,
    pub rel_tol: f64,
}

impl SweepSpec {
    /// Sweep with G = 1 and the default quadrature tolerance.
    pub fn new(
        material: MaterialParams,
        variant: ModelVariant,
        omega: OmegaGrid,
        d: impl Into<ParamValues>,
        theta: impl Into<ParamValues>,
        p: impl Into<ParamValues>,
    ) -> Self {
        Self {
            material,
            variant,
            omega,
            d: d.into(),
            theta: theta.into(),
            p: p.into(),
            g: Complex64::new(1.0, 0.0),
            rel_tol: DEFAULT_REL_TOL,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.omega.validate()?;
        quadrature::validate_rel_tol(self.rel_tol)?;
        let families = [&self.d, &self.theta, &self.p]
            .iter()
            .filter(|v| v.is_family())
            .count();
        if families > 1 {
            return Err(Error::InvalidSweep(
                "at most one of d, theta, p may be a list".into(),
            ));
        }
        for values in [&self.d, &self.theta, &self.p] {
            if values.values().is_empty() {
                return Err(Error::InvalidSweep("empty family list".into()));
            }
        }
        for &d in self.d.values() {
            for &p in self.p.values() {
                FilmConfig::new(d, p)?.with_g(self.g)?;
            }
        }
        for &theta in self.theta.values() {
            WaveConfig::new(self.omega.min, theta)?;
        }
        Ok(())
    }

    /// The curve-labelling parameter and its values. Without a list-valued
    /// parameter the sweep is a single curve labelled by `d`.
    pub fn family(&self) -> (FamilyParam, Vec<f64>) {
        if self.theta.is_family() {
            (FamilyParam::Angle, self.theta.values().to_vec())
        } else if self.p.is_family() {
            (FamilyParam::Specularity, self.p.values().to_vec())
        } else {
            (FamilyParam::Thickness, self.d.values().to_vec())
        }
    }

    fn point(&self, family_value: f64, omega: f64) -> (f64, f64, f64, f64) {
        let pick = |values: &ParamValues| match values {
            ParamValues::Fixed(v) => *v,
            ParamValues::Family(_) => family_value,
        };
        (omega, pick(&self.d), pick(&self.theta), pick(&self.p))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub omega: f64,
    pub d: f64,
    pub theta: f64,
    pub p: f64,
    pub t: f64,
    pub r: f64,
    pub a: f64,
    pub sigma_d: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    T,
    R,
    A,
}

impl Quantity {
    pub fn of(self, row: &SweepRow) -> f64 {
        match self {
            Quantity::T => row.t,
            Quantity::R => row.r,
            Quantity::A => row.a,
        }
    }
}

/// Rows ordered by family value (in spec order), then by ascending ω.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// `(family value, rows of that curve)` in order.
    pub fn curves(&self) -> impl Iterator<Item = (f64, &[SweepRow])> {
        let (_, values) = self.spec.family();
        values.into_iter().zip(self.rows.chunks(self.spec.omega.count))
    }

    pub fn curve(&self, family_value: f64) -> Result<&[SweepRow]> {
        self.curves()
            .find(|(v, _)| same_value(*v, family_value))
            .map(|(_, rows)| rows)
            .ok_or(Error::UnknownFamilyValue(family_value))
    }
}

fn same_value(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= 1e-9 * a.abs().max(b.abs())
}

/// Evaluates every grid point on the current rayon pool.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let (_, family_values) = spec.family();
    let omegas = spec.omega.values();
    let points: Vec<_> = family_values
        .iter()
        .flat_map(|&fv| omegas.iter().map(move |&om| spec.point(fv, om)))
        .collect();

    let evaluated: Vec<Result<SweepRow>> = points
        .par_iter()
        .map(|&(omega, d, theta, p)| {
            let wrap = |source: Error| Error::SweepPoint {
                omega,
                d,
                theta,
                p,
                source: Box::new(source),
            };
            let film = FilmConfig::new(d, p)
                .and_then(|f| f.with_g(spec.g))
                .map_err(wrap)?;
            let wave = WaveConfig::new(omega, theta).map_err(wrap)?;
            let out =
                evaluate_with_tol(&spec.material, &film, &wave, spec.variant, spec.rel_tol).map_err(wrap)?;
            Ok(SweepRow {
                omega,
                d,
                theta,
                p,
                t: out.t,
                r: out.r,
                a: out.a,
                sigma_d: out.sigma_d,
            })
        })
        .collect();

    let rows = evaluated.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(SweepResult {
        spec: spec.clone(),
        rows,
    })
}

/// [`run_sweep`] on a dedicated pool of `threads` workers.
pub fn run_sweep_with_threads(spec: &SweepSpec, threads: usize) -> Result<SweepResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidSweep(format!("cannot start worker pool: {e}")))?;
    pool.install(|| run_sweep(spec))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub omega: f64,
    pub value: f64,
    /// Index into the curve.
    pub index: usize,
    /// Both neighbours strictly lower.
    pub interior: bool,
}

/// Largest value of `quantity` along the ω axis of one curve. Ties resolve to
/// the lowest ω.
pub fn find_extremum(result: &SweepResult, quantity: Quantity, family_value: f64) -> Result<Extremum> {
    let rows = result.curve(family_value)?;
    if rows.is_empty() {
        return Err(Error::UnknownFamilyValue(family_value));
    }
    let mut best = 0;
    for (i, row) in rows.iter().enumerate().skip(1) {
        if quantity.of(row) > quantity.of(&rows[best]) {
            best = i;
        }
    }
    let value = quantity.of(&rows[best]);
    let interior = best > 0
        && best + 1 < rows.len()
        && quantity.of(&rows[best - 1]) < value
        && quantity.of(&rows[best + 1]) < value;
    Ok(Extremum {
        omega: rows[best].omega,
        value,
        index: best,
        interior,
    })
}
