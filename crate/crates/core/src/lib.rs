//! Transmission, reflection and absorption of electromagnetic p-waves by thin
//! metal films.
//!
//! The film conductivity follows the Fuchs–Sondheimer size effect (specularity
//! `p`, reduced thickness `w = d / l`) with the Drude substitutions
//! `l → v_F τ / (1 − iωτ)` and `σ0 → σ0 / (1 − iωτ)`. Two surface impedances,
//! one per field configuration, give the P-factors from which T, R and A follow.
//! Gaussian-CGS units throughout.
//!
//! ```
//! use pwave_core::{evaluate, FilmConfig, MaterialParams, ModelVariant, WaveConfig};
//!
//! let sodium = MaterialParams::sodium();
//! let film = FilmConfig::new(1e-6, 0.3)?;
//! let wave = WaveConfig::new(1e14, 0.0)?;
//! let out = evaluate(&sodium, &film, &wave, ModelVariant::LowFreqSimplified)?;
//! assert!((out.t + out.r + out.a - 1.0).abs() < 1e-15);
//! # Ok::<(), pwave_core::Error>(())
//! ```

pub mod coefficients;
pub mod conductivity;
pub mod error;
pub mod impedance;
pub mod params;
pub mod presets;
pub mod quadrature;
pub mod sweep;

pub use coefficients::{
    evaluate, evaluate_with_sigma, evaluate_with_tol, tra_from_p, OpticalCoefficients, Tra,
};
pub use conductivity::{complex_mfp, drude_sigma, reduced_thickness, sigma_film, sigma_film_with_tol};
pub use error::{Error, Result};
pub use impedance::{impedance_antisymmetric, impedance_symmetric, p_factor, ModelVariant};
pub use params::{FilmConfig, MaterialParams, WaveConfig, SPEED_OF_LIGHT};
pub use presets::FigurePreset;
pub use quadrature::{fuchs_integral, phi_inverse, FuchsIntegralSpec};
pub use sweep::{
    find_extremum, run_sweep, run_sweep_with_threads, Extremum, FamilyParam, OmegaGrid, ParamValues,
    Quantity, SweepResult, SweepRow, SweepSpec,
};
