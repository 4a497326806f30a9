//! Transmission, reflection and absorption of the film.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::conductivity::sigma_film_with_tol;
use crate::error::Result;
use crate::impedance::{impedance_antisymmetric, impedance_symmetric, p_factor, ModelVariant};
use crate::params::{FilmConfig, MaterialParams, WaveConfig, SPEED_OF_LIGHT};
use crate::quadrature::DEFAULT_REL_TOL;

/// T, R, A together with the intermediate quantities that produced them.
///
/// `z1`/`p1` are `None` under [`ModelVariant::LowFreqSimplified`], which has no
/// symmetric-configuration term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpticalCoefficients {
    pub t: f64,
    pub r: f64,
    pub a: f64,
    pub sigma_d: Complex64,
    pub z1: Option<Complex64>,
    pub z2: Complex64,
    pub p1: Option<Complex64>,
    pub p2: Complex64,
}

/// T, R and A from a pair of P-factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tra {
    pub t: f64,
    pub r: f64,
    pub a: f64,
}

/// `T = |P1 − P2|²/4`, `R = |P1 + P2|²/4`, `A = 1 − T − R`.
pub fn tra_from_p(p1: Complex64, p2: Complex64) -> Tra {
    let t = 0.25 * (p1 - p2).norm_sqr();
    let r = 0.25 * (p1 + p2).norm_sqr();
    Tra { t, r, a: 1.0 - t - r }
}

/// Evaluates the film response with the default quadrature tolerance.
pub fn evaluate(
    material: &MaterialParams,
    film: &FilmConfig,
    wave: &WaveConfig,
    variant: ModelVariant,
) -> Result<OpticalCoefficients> {
    evaluate_with_tol(material, film, wave, variant, DEFAULT_REL_TOL)
}

pub fn evaluate_with_tol(
    material: &MaterialParams,
    film: &FilmConfig,
    wave: &WaveConfig,
    variant: ModelVariant,
    rel_tol: f64,
) -> Result<OpticalCoefficients> {
    let sigma_d = sigma_film_with_tol(material, film, wave.omega(), rel_tol)?;
    evaluate_with_sigma(sigma_d, film, wave, variant)
}

/// Film response for a given average conductivity `sigma_d` [1/s].
///
/// This is the second half of [`evaluate`]; it is exposed so that the
/// conductivity can be prescribed directly (e.g. the dielectric limit σ_d → 0).
pub fn evaluate_with_sigma(
    sigma_d: Complex64,
    film: &FilmConfig,
    wave: &WaveConfig,
    variant: ModelVariant,
) -> Result<OpticalCoefficients> {
    match variant {
        ModelVariant::FullKd | ModelVariant::ThinKd => {
            let z1 = impedance_symmetric(film, wave, variant)?;
            let z2 = impedance_antisymmetric(sigma_d, film, wave, variant)?;
            let p1 = p_factor(z1, wave.theta())?;
            let p2 = p_factor(z2, wave.theta())?;
            let Tra { t, r, a } = tra_from_p(p1, p2);
            Ok(OpticalCoefficients {
                t,
                r,
                a,
                sigma_d,
                z1: Some(z1),
                z2,
                p1: Some(p1),
                p2,
            })
        }
        ModelVariant::LowFreqSimplified => {
            // x = 2π d σ_d cos θ / c; T = 1/|1 + x|², R = |x / (1 + x)|²
            let x = sigma_d * (2.0 * PI * film.d() * wave.cos_theta() / SPEED_OF_LIGHT);
            let one_plus = 1.0 + x;
            let t = 1.0 / one_plus.norm_sqr();
            let r = x.norm_sqr() / one_plus.norm_sqr();
            let z2 = impedance_antisymmetric(sigma_d, film, wave, variant)?;
            let p2 = p_factor(z2, wave.theta())?;
            Ok(OpticalCoefficients {
                t,
                r,
                a: 1.0 - t - r,
                sigma_d,
                z1: None,
                z2,
                p1: None,
                p2,
            })
        }
    }
}
