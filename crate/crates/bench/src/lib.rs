//! Shared inputs for the criterion benchmarks.

use num_complex::Complex64;
use pwave_core::{FilmConfig, MaterialParams, WaveConfig};

/// Reduced thicknesses spanning the preset sweeps: thin/static, mid-band, and
/// the strongly oscillating top of the ω axis for a 10⁻⁵ cm film.
pub fn sample_w() -> [(&'static str, Complex64); 3] {
    [
        ("thin_static", Complex64::new(0.078, 0.0)),
        ("mid_band", Complex64::new(0.078, -7.8)),
        ("oscillating", Complex64::new(0.78, -152.6)),
    ]
}

pub fn sodium_point() -> (MaterialParams, FilmConfig, WaveConfig) {
    (
        MaterialParams::sodium(),
        FilmConfig::new(1e-6, 0.3).expect("valid film"),
        WaveConfig::new(1e14, 0.0).expect("valid wave"),
    )
}
