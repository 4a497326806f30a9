//! The nine sodium-film figure sweeps.
//!
//! | preset  | family                               | fixed                 | quantity |
//! |---------|--------------------------------------|-----------------------|----------|
//! | fig1–3  | d ∈ {1, 0.9, 0.8} × 10⁻⁶ cm          | θ = 0, p = 0.3        | T, R, A  |
//! | fig4–6  | θ ∈ {0, π/4, 5π/12}                  | d = 10⁻⁶ cm, p = 0.3  | T, R, A  |
//! | fig7–9  | p ∈ {0, 0.5, 0.8}                    | d = 10⁻⁶ cm, θ = 0    | T, R, A  |
//!
//! All use the simplified low-frequency formulas on ω ∈ (0, 0.2 ω_p] with
//! 400 points starting at 0.2 ω_p / 400.

use std::f64::consts::{FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use crate::impedance::ModelVariant;
use crate::params::MaterialParams;
use crate::sweep::{FamilyParam, OmegaGrid, ParamValues, Quantity, SweepSpec};

pub const PRESET_POINTS: usize = 400;

/// Upper end of the preset ω axis as a fraction of ω_p.
pub const OMEGA_MAX_FRACTION: f64 = 0.2;

pub const FILM_THICKNESS: f64 = 1e-6;
pub const SPECULARITY: f64 = 0.3;

pub const THICKNESS_FAMILY: [f64; 3] = [1e-6, 0.9e-6, 0.8e-6];
pub const ANGLE_FAMILY: [f64; 3] = [0.0, FRAC_PI_4, 5.0 * PI / 12.0];
pub const SPECULARITY_FAMILY: [f64; 3] = [0.0, 0.5, 0.8];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigurePreset {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig8,
    Fig9,
}

impl FigurePreset {
    pub const ALL: [FigurePreset; 9] = [
        FigurePreset::Fig1,
        FigurePreset::Fig2,
        FigurePreset::Fig3,
        FigurePreset::Fig4,
        FigurePreset::Fig5,
        FigurePreset::Fig6,
        FigurePreset::Fig7,
        FigurePreset::Fig8,
        FigurePreset::Fig9,
    ];

    fn number(self) -> usize {
        self as usize + 1
    }

    pub fn id(self) -> String {
        format!("fig{}", self.number())
    }

    pub fn quantity(self) -> Quantity {
        match (self.number() - 1) % 3 {
            0 => Quantity::T,
            1 => Quantity::R,
            _ => Quantity::A,
        }
    }

    pub fn family(self) -> FamilyParam {
        match (self.number() - 1) / 3 {
            0 => FamilyParam::Thickness,
            1 => FamilyParam::Angle,
            _ => FamilyParam::Specularity,
        }
    }

    /// Parameters not stated in the figure caption itself.
    pub fn assumption(self) -> Option<&'static str> {
        match self.family() {
            FamilyParam::Angle => Some("film thickness d = 1e-6 cm assumed"),
            _ => None,
        }
    }

    pub fn omega_grid(material: &MaterialParams) -> OmegaGrid {
        let max = OMEGA_MAX_FRACTION * material.omega_p();
        OmegaGrid {
            min: max / PRESET_POINTS as f64,
            max,
            count: PRESET_POINTS,
        }
    }

    pub fn spec(self) -> SweepSpec {
        self.spec_for(MaterialParams::sodium())
    }

    /// The same sweep layout for another material, on its own ω grid.
    pub fn spec_for(self, material: MaterialParams) -> SweepSpec {
        let omega = Self::omega_grid(&material);
        let variant = ModelVariant::LowFreqSimplified;
        let family = |values: [f64; 3]| ParamValues::Family(values.to_vec());
        match self.family() {
            FamilyParam::Thickness => SweepSpec::new(
                material,
                variant,
                omega,
                family(THICKNESS_FAMILY),
                0.0,
                SPECULARITY,
            ),
            FamilyParam::Angle => SweepSpec::new(
                material,
                variant,
                omega,
                FILM_THICKNESS,
                family(ANGLE_FAMILY),
                SPECULARITY,
            ),
            FamilyParam::Specularity => SweepSpec::new(
                material,
                variant,
                omega,
                FILM_THICKNESS,
                0.0,
                family(SPECULARITY_FAMILY),
            ),
        }
    }
}

impl fmt::Display for FigurePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fig{}", self.number())
    }
}

impl FromStr for FigurePreset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FigurePreset::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| format!("unknown preset '{s}' (expected fig1 ... fig9)"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for p in FigurePreset::ALL {
            assert_eq!(p.id().parse::<FigurePreset>().unwrap(), p);
        }
        assert!("fig10".parse::<FigurePreset>().is_err());
        assert!("fig0".parse::<FigurePreset>().is_err());
    }

    #[test]
    fn preset_layout() {
        assert_eq!(FigurePreset::Fig1.quantity(), Quantity::T);
        assert_eq!(FigurePreset::Fig5.quantity(), Quantity::R);
        assert_eq!(FigurePreset::Fig9.quantity(), Quantity::A);
        assert_eq!(FigurePreset::Fig3.family(), FamilyParam::Thickness);
        assert_eq!(FigurePreset::Fig6.family(), FamilyParam::Angle);
        assert_eq!(FigurePreset::Fig7.family(), FamilyParam::Specularity);
        assert!(FigurePreset::Fig4.assumption().is_some());
        assert!(FigurePreset::Fig7.assumption().is_none());
    }

    #[test]
    fn preset_specs_validate() {
        for p in FigurePreset::ALL {
            let spec = p.spec();
            spec.validate().unwrap();
            assert_eq!(spec.variant, ModelVariant::LowFreqSimplified);
            assert_eq!(spec.material, MaterialParams::sodium());
            assert_eq!(spec.family().0, p.family());
            assert_eq!(spec.family().1.len(), 3);
        }
        let g = FigurePreset::Fig1.spec().omega;
        assert_eq!((g.min, g.max, g.count), (3.25e12, 1.3e15, 400));
    }

    #[test]
    fn fig7_9_use_stated_geometry() {
        let spec = FigurePreset::Fig8.spec();
        assert_eq!(spec.d, ParamValues::Fixed(1e-6));
        assert_eq!(spec.theta, ParamValues::Fixed(0.0));
        assert_eq!(spec.p, ParamValues::Family(vec![0.0, 0.5, 0.8]));
    }
}
