//! Drude frequency dependence and the Fuchs–Sondheimer size effect.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::{FilmConfig, MaterialParams};
use crate::quadrature::{self, DEFAULT_REL_TOL};

fn check_omega(omega: f64) -> Result<()> {
    if omega >= 0.0 && omega.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "omega",
            value: omega,
            expected: "omega >= 0",
        })
    }
}

/// Bulk Drude conductivity σ(ω) = σ0 / (1 − iωτ) [1/s].
pub fn drude_sigma(material: &MaterialParams, omega: f64) -> Result<Complex64> {
    check_omega(omega)?;
    Ok(material.sigma0() / Complex64::new(1.0, -omega * material.tau()))
}

/// Complex mean free path l(ω) = v_F τ / (1 − iωτ) [cm].
pub fn complex_mfp(material: &MaterialParams, omega: f64) -> Result<Complex64> {
    check_omega(omega)?;
    Ok(material.mean_free_path() / Complex64::new(1.0, -omega * material.tau()))
}

/// Reduced thickness w = d / l(ω) = d (1 − iωτ) / (v_F τ).
///
/// Computed directly rather than as `d / complex_mfp`, which keeps Re(w)
/// independent of ω to the last bit.
pub fn reduced_thickness(material: &MaterialParams, film: &FilmConfig, omega: f64) -> Result<Complex64> {
    check_omega(omega)?;
    let w0 = film.d() / material.mean_free_path();
    Ok(Complex64::new(w0, -w0 * omega * material.tau()))
}

/// Thickness-averaged film conductivity σ_d = σ(ω) · w / Φ(w).
pub fn sigma_film(material: &MaterialParams, film: &FilmConfig, omega: f64) -> Result<Complex64> {
    sigma_film_with_tol(material, film, omega, DEFAULT_REL_TOL)
}

pub fn sigma_film_with_tol(
    material: &MaterialParams,
    film: &FilmConfig,
    omega: f64,
    rel_tol: f64,
) -> Result<Complex64> {
    let sigma = drude_sigma(material, omega)?;
    if film.p() == 1.0 {
        // specular walls: w / Φ(w) = 1
        return Ok(sigma);
    }
    quadrature::validate_rel_tol(rel_tol)?;
    let w = reduced_thickness(material, film, omega)?;
    let inv_phi = quadrature::phi_inverse(w, film.p(), rel_tol)?;
    Ok(sigma * w * inv_phi)
}
