//! Input parameter sets, all in Gaussian-CGS units.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Speed of light in vacuum [cm/s].
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e10;

fn check(name: &'static str, value: f64, ok: bool, expected: &'static str) -> Result<()> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            expected,
        })
    }
}

/// Electron-gas constants of the bulk metal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialParams {
    omega_p: f64,
    v_fermi: f64,
    tau: f64,
}

impl MaterialParams {
    /// `omega_p` plasma frequency [rad/s], `v_fermi` Fermi velocity [cm/s],
    /// `tau` relaxation time [s].
    pub fn new(omega_p: f64, v_fermi: f64, tau: f64) -> Result<Self> {
        check("omega_p", omega_p, omega_p > 0.0, "omega_p > 0")?;
        check("v_fermi", v_fermi, v_fermi > 0.0, "v_fermi > 0")?;
        check("tau", tau, tau > 0.0, "tau > 0")?;
        Ok(Self {
            omega_p,
            v_fermi,
            tau,
        })
    }

    /// Sodium: ω_p = 6.5e15 s⁻¹, v_F = 8.52e7 cm/s, τ = 1.5e-13 s.
    pub fn sodium() -> Self {
        Self {
            omega_p: 6.5e15,
            v_fermi: 8.52e7,
            tau: 1.5e-13,
        }
    }

    pub fn omega_p(&self) -> f64 {
        self.omega_p
    }

    pub fn v_fermi(&self) -> f64 {
        self.v_fermi
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// Static bulk conductivity σ0 = ω_p² τ / 4π [1/s].
    pub fn sigma0(&self) -> f64 {
        self.omega_p * self.omega_p * self.tau / (4.0 * PI)
    }

    /// Static mean free path l = v_F τ [cm].
    pub fn mean_free_path(&self) -> f64 {
        self.v_fermi * self.tau
    }

    /// Smallest skin depth over all frequencies, δ0 = c / ω_p [cm].
    pub fn skin_depth_floor(&self) -> f64 {
        SPEED_OF_LIGHT / self.omega_p
    }
}

/// Film geometry and surface properties.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilmConfig {
    d: f64,
    p: f64,
    g: Complex64,
}

impl FilmConfig {
    /// Film of thickness `d` [cm] with specularity `p`; G defaults to 1.
    pub fn new(d: f64, p: f64) -> Result<Self> {
        check("d", d, d > 0.0, "d > 0")?;
        check("p", p, (0.0..=1.0).contains(&p), "0 <= p <= 1")?;
        Ok(Self {
            d,
            p,
            g: Complex64::new(1.0, 0.0),
        })
    }

    /// Overrides the field-penetration factor G.
    pub fn with_g(mut self, g: Complex64) -> Result<Self> {
        check("G", g.re, g.im.is_finite(), "a finite complex number")?;
        self.g = g;
        Ok(self)
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn g(&self) -> Complex64 {
        self.g
    }

    /// Whether the film is thinner than the skin-depth floor of `material`,
    /// the regime in which the closed-form impedances hold at any frequency.
    pub fn is_thin(&self, material: &MaterialParams) -> bool {
        self.d < material.skin_depth_floor()
    }
}

/// Frequency and angle of incidence of the p-wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveConfig {
    omega: f64,
    theta: f64,
}

impl WaveConfig {
    /// `omega` [rad/s] ≥ 0, `theta` [rad] in [0, π/2].
    pub fn new(omega: f64, theta: f64) -> Result<Self> {
        check("omega", omega, omega >= 0.0, "omega >= 0")?;
        check(
            "theta",
            theta,
            (0.0..=FRAC_PI_2).contains(&theta),
            "0 <= theta <= pi/2",
        )?;
        Ok(Self { omega, theta })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Vacuum wave number k = ω / c [1/cm].
    pub fn wave_number(&self) -> f64 {
        self.omega / SPEED_OF_LIGHT
    }

    /// cos θ, taken as exactly 0 at the f64 nearest π/2.
    pub fn cos_theta(&self) -> f64 {
        cos_incidence(self.theta)
    }

    pub fn sin2_theta(&self) -> f64 {
        let s = self.theta.sin();
        s * s
    }
}

pub(crate) fn cos_incidence(theta: f64) -> f64 {
    if theta == FRAC_PI_2 {
        0.0
    } else {
        theta.cos()
    }
}
