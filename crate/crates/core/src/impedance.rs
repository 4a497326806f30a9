//! Surface impedances of the two field configurations and the P-factors built
//! from them. Impedances are dimensionless (E/H in Gaussian units).

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::{cos_incidence, FilmConfig, WaveConfig, SPEED_OF_LIGHT};

/// Denominators with modulus below this are treated as singular.
pub const DEGENERACY_FLOOR: f64 = 1e-30;

/// Which closed form to use for the film response.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelVariant {
    /// Impedances kept to all orders in kd.
    FullKd,
    /// Leading order in kd ≪ 1.
    ThinKd,
    /// Thin film with |kdG| ≪ 1 dropped as well; does not depend on G.
    LowFreqSimplified,
}

impl ModelVariant {
    pub const ALL: [ModelVariant; 3] = [
        ModelVariant::FullKd,
        ModelVariant::ThinKd,
        ModelVariant::LowFreqSimplified,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelVariant::FullKd => "full-kd",
            ModelVariant::ThinKd => "thin-kd",
            ModelVariant::LowFreqSimplified => "low-freq",
        }
    }
}

impl fmt::Display for ModelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full-kd" => Ok(ModelVariant::FullKd),
            "thin-kd" => Ok(ModelVariant::ThinKd),
            "low-freq" => Ok(ModelVariant::LowFreqSimplified),
            other => Err(format!(
                "unknown variant '{other}' (expected full-kd, thin-kd or low-freq)"
            )),
        }
    }
}

fn nonsingular(context: &'static str, denominator: Complex64) -> Result<()> {
    let modulus = denominator.norm();
    if modulus < DEGENERACY_FLOOR || !modulus.is_finite() {
        Err(Error::DegenerateDenominator { context, modulus })
    } else {
        Ok(())
    }
}

/// Z⁽¹⁾ of the symmetric configuration.
///
/// `FullKd`: `(ikd/2)(1 − G sin²θ)`; `ThinKd`: `−(ik/2) G d sin²θ`.
pub fn impedance_symmetric(film: &FilmConfig, wave: &WaveConfig, variant: ModelVariant) -> Result<Complex64> {
    let kd = wave.wave_number() * film.d();
    let s2 = wave.sin2_theta();
    let i = Complex64::i();
    match variant {
        ModelVariant::FullKd => Ok(i * (0.5 * kd) * (1.0 - film.g() * s2)),
        ModelVariant::ThinKd => Ok(-i * (0.5 * kd * s2) * film.g()),
        ModelVariant::LowFreqSimplified => Err(Error::UnsupportedVariant {
            operation: "impedance_symmetric",
            variant: variant.name(),
        }),
    }
}

/// Z⁽²⁾ of the antisymmetric configuration for a film of average
/// conductivity `sigma_d`.
///
/// `FullKd`: `2c / (ickd − 4πσ_d d)`; `ThinKd` (and `LowFreqSimplified`,
/// whose formulas descend from it): `−c / (2πσ_d d)`.
pub fn impedance_antisymmetric(
    sigma_d: Complex64,
    film: &FilmConfig,
    wave: &WaveConfig,
    variant: ModelVariant,
) -> Result<Complex64> {
    use std::f64::consts::PI;
    let d = film.d();
    // σ_d d / c is dimensionless
    let s = sigma_d * (d / SPEED_OF_LIGHT);
    match variant {
        ModelVariant::FullKd => {
            let kd = wave.wave_number() * d;
            let denom = Complex64::new(0.0, kd) - 4.0 * PI * s;
            nonsingular("antisymmetric impedance (full kd)", denom)?;
            Ok(2.0 / denom)
        }
        ModelVariant::ThinKd | ModelVariant::LowFreqSimplified => {
            let denom = 2.0 * PI * s;
            nonsingular("antisymmetric impedance (thin film)", denom)?;
            Ok(-1.0 / denom)
        }
    }
}

/// P = (cos θ + Z) / (cos θ − Z).
pub fn p_factor(z: Complex64, theta: f64) -> Result<Complex64> {
    let cos = cos_incidence(theta);
    let denom = cos - z;
    nonsingular("P-factor", denom)?;
    Ok((cos + z) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::MaterialParams;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn film(d: f64) -> FilmConfig {
        FilmConfig::new(d, 0.3).unwrap()
    }

    #[test]
    fn normal_incidence_symmetric() {
        let f = film(1e-6).with_g(Complex64::new(0.4, 0.1)).unwrap();
        let wave = WaveConfig::new(1e14, 0.0).unwrap();
        let z = impedance_symmetric(&f, &wave, ModelVariant::FullKd).unwrap();
        assert_eq!(z.re, 0.0);
        assert!(z.im > 0.0);
        assert!((z.im - 0.5 * wave.wave_number() * 1e-6).abs() < 1e-20);
        let z0 = impedance_symmetric(&f, &wave, ModelVariant::ThinKd).unwrap();
        assert_eq!(z0.norm(), 0.0);
    }

    #[test]
    fn grazing_symmetric_unit_g_vanishes() {
        let wave = WaveConfig::new(1e14, FRAC_PI_2).unwrap();
        let z = impedance_symmetric(&film(1e-6), &wave, ModelVariant::FullKd).unwrap();
        assert_eq!(z.norm(), 0.0);
    }

    #[test]
    fn symmetric_rejects_low_freq_variant() {
        let wave = WaveConfig::new(1e14, 0.2).unwrap();
        assert!(matches!(
            impedance_symmetric(&film(1e-6), &wave, ModelVariant::LowFreqSimplified),
            Err(Error::UnsupportedVariant { .. })
        ));
    }

    #[test]
    fn thin_antisymmetric_is_negative_real() {
        let wave = WaveConfig::new(1e14, 0.3).unwrap();
        let z = impedance_antisymmetric(
            Complex64::new(3e16, 0.0),
            &film(1e-6),
            &wave,
            ModelVariant::ThinKd,
        )
        .unwrap();
        assert!(z.re < 0.0);
        assert_eq!(z.im, 0.0);
    }

    #[test]
    fn sodium_dc_thin_impedance() {
        let na = MaterialParams::sodium();
        let wave = WaveConfig::new(0.0, 0.0).unwrap();
        let z = impedance_antisymmetric(
            Complex64::new(na.sigma0(), 0.0),
            &film(1e-6),
            &wave,
            ModelVariant::ThinKd,
        )
        .unwrap();
        // hand chain: -c / (2π σ0 d) = -2.99792458e10 / (2π · 5.0432222592e17 · 1e-6)
        let expected = -2.997_924_58e10 / (2.0 * PI * 5.043_222_259_224_433e17 * 1e-6);
        assert!((z.re / expected - 1.0).abs() < 1e-14);
        assert!((z.re + 9.46e-3).abs() < 0.01e-3);
    }

    #[test]
    fn perfect_conductor_limit() {
        let wave = WaveConfig::new(1e14, 0.3).unwrap();
        for variant in [ModelVariant::FullKd, ModelVariant::ThinKd] {
            let z = impedance_antisymmetric(Complex64::new(1e40, 1e39), &film(1e-6), &wave, variant).unwrap();
            assert!(z.norm() < 1e-20);
        }
    }

    #[test]
    fn degenerate_antisymmetric() {
        let wave = WaveConfig::new(0.0, 0.3).unwrap();
        for variant in [ModelVariant::FullKd, ModelVariant::ThinKd] {
            let err =
                impedance_antisymmetric(Complex64::new(0.0, 0.0), &film(1e-6), &wave, variant).unwrap_err();
            assert!(err.is_numerical());
        }
    }

    #[test]
    fn p_factor_special_values() {
        for theta in [0.0, 0.4, FRAC_PI_3, 1.5] {
            assert_eq!(
                p_factor(Complex64::new(0.0, 0.0), theta).unwrap(),
                Complex64::new(1.0, 0.0)
            );
        }
        for z in [
            Complex64::new(-0.3, 0.0),
            Complex64::new(0.0, 2.0),
            Complex64::new(-1e-3, 5e-4),
        ] {
            assert_eq!(p_factor(z, FRAC_PI_2).unwrap(), Complex64::new(-1.0, 0.0));
        }
        assert!(p_factor(Complex64::new(0.0, 0.0), FRAC_PI_2).is_err());
        assert!(p_factor(Complex64::new(1.0, 0.0), 0.0).is_err());
    }

    #[test]
    fn p_factor_unimodular_for_imaginary_z() {
        for y in [1e-8, 1e-3, 0.5, 1.0, 7.0, 1e6] {
            let p = p_factor(Complex64::new(0.0, y), 0.0).unwrap();
            assert!((p.norm() - 1.0).abs() <= 4.0 * f64::EPSILON, "{y} {}", p.norm());
        }
    }

    #[test]
    fn variant_names_round_trip() {
        for v in ModelVariant::ALL {
            assert_eq!(v.name().parse::<ModelVariant>().unwrap(), v);
        }
        assert!("fullkd".parse::<ModelVariant>().is_err());
    }
}
