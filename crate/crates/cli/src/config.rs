//! Flat `key = value` run configuration.
//!
//! ```text
//! # sodium film, thickness family
//! material = sodium
//! variant = low-freq
//! omega_min = 3.25e12
//! omega_max = 1.3e15
//! omega_count = 400
//! d = 1e-6, 0.9e-6, 0.8e-6
//! theta = 0
//! p = 0.3
//! ```
//!
//! One assignment per line, `#` starts a comment. Unknown or repeated keys are
//! errors. A comma-separated value makes that parameter the curve family.

use std::collections::HashMap;
use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex64;
use pwave_core::quadrature::{DEFAULT_REL_TOL, MAX_REL_TOL, MIN_REL_TOL};
use pwave_core::{FigurePreset, MaterialParams, ModelVariant, OmegaGrid, ParamValues, SweepSpec};

use crate::output::OutputFormat;

const KEYS: &[&str] = &[
    "material",
    "omega_p",
    "v_fermi",
    "tau",
    "variant",
    "preset",
    "omega_min",
    "omega_max",
    "omega_count",
    "d",
    "theta",
    "p",
    "g",
    "g_im",
    "rel_tol",
    "output",
    "format",
];

const SWEEP_KEYS: &[&str] = &["omega_min", "omega_max", "omega_count", "d", "theta", "p"];
const CUSTOM_MATERIAL_KEYS: &[&str] = &["omega_p", "v_fermi", "tau"];

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub material: MaterialParams,
    pub preset: Option<FigurePreset>,
    pub sweep: SweepSpec,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    /// 1-based line, `None` for errors about missing keys or key combinations.
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

/// Every problem found in one document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigErrors(pub Vec<ConfigError>);

impl fmt::Display for ConfigErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ConfigErrors {}

struct Entry<'a> {
    line: usize,
    value: &'a str,
}

#[derive(Default)]
struct Parser<'a> {
    entries: HashMap<&'a str, Entry<'a>>,
    errors: Vec<ConfigError>,
}

impl<'a> Parser<'a> {
    fn error(&mut self, line: Option<usize>, message: impl Into<String>) {
        self.errors.push(ConfigError {
            line,
            message: message.into(),
        });
    }

    fn scan(&mut self, text: &'a str) {
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                self.error(
                    Some(line),
                    format!("syntax error: expected `key = value`, got `{content}`"),
                );
                continue;
            };
            let (key, value) = (key.trim(), value.trim());
            if key.is_empty() || value.is_empty() {
                self.error(
                    Some(line),
                    format!("syntax error: expected `key = value`, got `{content}`"),
                );
                continue;
            }
            if !KEYS.contains(&key) {
                self.error(Some(line), format!("unknown key `{key}`"));
                continue;
            }
            if let Some(first) = self.entries.get(key) {
                let first = first.line;
                self.error(
                    Some(line),
                    format!("duplicate key `{key}` (first set on line {first})"),
                );
                continue;
            }
            self.entries.insert(key, Entry { line, value });
        }
    }

    fn has(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    fn line_of(&self, key: &str) -> Option<usize> {
        self.entries.get(key).map(|e| e.line)
    }

    fn parsed<T: FromStr>(&mut self, key: &str) -> Option<T>
    where
        T::Err: fmt::Display,
    {
        let entry = self.entries.get(key)?;
        let (line, value) = (entry.line, entry.value);
        match value.parse::<T>() {
            Ok(v) => Some(v),
            Err(e) => {
                self.error(Some(line), format!("invalid value for `{key}`: {e}"));
                None
            }
        }
    }

    fn number(&mut self, key: &str) -> Option<f64> {
        let entry = self.entries.get(key)?;
        let (line, value) = (entry.line, entry.value);
        parse_number(value).or_else(|| {
            self.error(Some(line), format!("invalid number for `{key}`: `{value}`"));
            None
        })
    }

    /// Number within a range; `bounds` is the human-readable form.
    fn bounded(&mut self, key: &str, ok: impl Fn(f64) -> bool, bounds: &str) -> Option<f64> {
        let v = self.number(key)?;
        if ok(v) {
            Some(v)
        } else {
            let line = self.line_of(key);
            self.error(line, format!("`{key}` = {v} is out of range {bounds}"));
            None
        }
    }

    fn values(&mut self, key: &str, ok: impl Fn(f64) -> bool, bounds: &str) -> Option<ParamValues> {
        let entry = self.entries.get(key)?;
        let (line, value) = (entry.line, entry.value);
        let items: Vec<&str> = value.split(',').map(str::trim).collect();
        let mut out = Vec::with_capacity(items.len());
        for item in &items {
            match parse_number(item) {
                Some(v) if ok(v) => out.push(v),
                Some(v) => {
                    self.error(Some(line), format!("`{key}` = {v} is out of range {bounds}"));
                    return None;
                }
                None => {
                    self.error(Some(line), format!("invalid number for `{key}`: `{item}`"));
                    return None;
                }
            }
        }
        if items.len() == 1 {
            Some(ParamValues::Fixed(out[0]))
        } else {
            Some(ParamValues::Family(out))
        }
    }
}

fn parse_number(s: &str) -> Option<f64> {
    s.parse::<f64>().ok().filter(|v| v.is_finite())
}

fn positive(v: f64) -> bool {
    v > 0.0
}

/// Parses and validates a configuration document.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigErrors> {
    let mut cx = Parser::default();
    cx.scan(text);

    let material_name = cx.entries.get("material").map(|e| (e.line, e.value));
    let material = match material_name {
        None | Some((_, "sodium")) => {
            for key in CUSTOM_MATERIAL_KEYS {
                if let Some(line) = cx.line_of(key) {
                    cx.error(
                        Some(line),
                        format!("`{key}` is only valid with `material = custom`"),
                    );
                }
            }
            Some(MaterialParams::sodium())
        }
        Some((line, "custom")) => {
            let omega_p = cx.bounded("omega_p", positive, "(0, inf)");
            let v_fermi = cx.bounded("v_fermi", positive, "(0, inf)");
            let tau = cx.bounded("tau", positive, "(0, inf)");
            for key in CUSTOM_MATERIAL_KEYS {
                if !cx.has(key) {
                    cx.error(Some(line), format!("`material = custom` requires `{key}`"));
                }
            }
            match (omega_p, v_fermi, tau) {
                (Some(a), Some(b), Some(c)) => MaterialParams::new(a, b, c).ok(),
                _ => None,
            }
        }
        Some((line, other)) => {
            cx.error(
                Some(line),
                format!("unknown material `{other}` (expected sodium or custom)"),
            );
            None
        }
    };

    let variant: Option<ModelVariant> = cx.parsed("variant");
    let preset: Option<FigurePreset> = cx.parsed("preset");
    let format: Option<OutputFormat> = cx.parsed("format");
    let rel_tol = cx.bounded(
        "rel_tol",
        |v| (MIN_REL_TOL..=MAX_REL_TOL).contains(&v),
        "[1e-14, 1e-4]",
    );
    let g_re = cx.number("g");
    let g_im = cx.number("g_im");
    let output = cx.entries.get("output").map(|e| PathBuf::from(e.value));

    let mut sweep = None;
    if cx.has("preset") {
        for key in SWEEP_KEYS {
            if let Some(line) = cx.line_of(key) {
                cx.error(Some(line), format!("`{key}` cannot be combined with `preset`"));
            }
        }
        if let (Some(preset), Some(material)) = (preset, material) {
            sweep = Some(preset.spec_for(material));
        }
    } else {
        let omega_min = cx.bounded("omega_min", |v| v >= 0.0, "[0, inf)");
        let omega_max = cx.bounded("omega_max", positive, "(0, inf)");
        let omega_count = cx.parsed::<usize>("omega_count");
        if let Some(n) = omega_count.filter(|&n| n < 2) {
            let line = cx.line_of("omega_count");
            cx.error(line, format!("`omega_count` = {n} is out of range [2, inf)"));
        }
        let d = cx.values("d", positive, "(0, inf)");
        let theta = if cx.has("theta") {
            cx.values("theta", |v| (0.0..=FRAC_PI_2).contains(&v), "[0, pi/2]")
        } else {
            Some(ParamValues::Fixed(0.0))
        };
        let p = cx.values("p", |v| (0.0..=1.0).contains(&v), "[0, 1]");
        for key in ["omega_min", "omega_max", "omega_count", "d", "p"] {
            if !cx.has(key) {
                cx.error(None, format!("missing required key `{key}` (or set `preset`)"));
            }
        }
        if let (Some(lo), Some(hi)) = (omega_min, omega_max) {
            if lo >= hi {
                let line = cx.line_of("omega_max");
                cx.error(line, format!("`omega_max` = {hi} must exceed `omega_min` = {lo}"));
            }
        }
        let families = [&d, &theta, &p]
            .iter()
            .filter(|v| matches!(v, Some(ParamValues::Family(_))))
            .count();
        if families > 1 {
            cx.error(None, "at most one of `d`, `theta`, `p` may be a list");
        }
        if let (Some(material), Some(min), Some(max), Some(count), Some(d), Some(theta), Some(p)) =
            (material, omega_min, omega_max, omega_count, d, theta, p)
        {
            sweep = Some(SweepSpec::new(
                material,
                ModelVariant::LowFreqSimplified,
                OmegaGrid { min, max, count },
                d,
                theta,
                p,
            ));
        }
    }

    if !cx.errors.is_empty() {
        cx.errors.sort_by_key(|e| e.line.unwrap_or(usize::MAX));
        return Err(ConfigErrors(cx.errors));
    }

    let mut sweep = sweep.expect("sweep assembled when no errors were recorded");
    if let Some(variant) = variant {
        sweep.variant = variant;
    }
    sweep.g = Complex64::new(g_re.unwrap_or(1.0), g_im.unwrap_or(0.0));
    sweep.rel_tol = rel_tol.unwrap_or(DEFAULT_REL_TOL);
    if let Err(e) = sweep.validate() {
        return Err(ConfigErrors(vec![ConfigError {
            line: None,
            message: e.to_string(),
        }]));
    }

    Ok(RunConfig {
        material: sweep.material,
        preset,
        sweep,
        output,
        format: format.unwrap_or_default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn errors(text: &str) -> Vec<ConfigError> {
        parse_config(text).unwrap_err().0
    }

    #[test]
    fn sodium_preset() {
        let cfg = parse_config("material = sodium\npreset = fig1").unwrap();
        assert_eq!(cfg.material, MaterialParams::sodium());
        assert_eq!(cfg.preset, Some(FigurePreset::Fig1));
        assert_eq!(cfg.sweep, FigurePreset::Fig1.spec());
        assert_eq!(cfg.format, OutputFormat::Csv);
    }

    #[test]
    fn p_out_of_range_names_key_and_bounds() {
        let errs = errors("p = 1.2");
        let e = errs.iter().find(|e| e.line == Some(1)).unwrap();
        assert!(e.message.contains("`p`"), "{e}");
        assert!(e.message.contains("[0, 1]"), "{e}");
    }

    #[test]
    fn custom_sweep() {
        let cfg = parse_config(
            "omega_min = 3.25e12\nomega_max = 1.3e15\nomega_count = 400\nd = 1e-6\ntheta = 0\np = 0.3\n",
        )
        .unwrap();
        assert_eq!(cfg.sweep.omega, FigurePreset::Fig1.spec().omega);
        assert_eq!(cfg.sweep.d, ParamValues::Fixed(1e-6));
        assert_eq!(cfg.sweep.variant, ModelVariant::LowFreqSimplified);
        assert_eq!(cfg.sweep.g, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn comments_lists_and_overrides() {
        let text = "# header\nmaterial = custom   # metal\nomega_p = 1e16\nv_fermi = 1e8\ntau = 1e-14\n\
                    variant = full-kd\nomega_min = 1e13\nomega_max = 1e15\nomega_count = 10\n\
                    d = 2e-7\ntheta = 0, 0.5, 1.0\np = 0.5\ng = 0.8\ng_im = 0.1\nrel_tol = 1e-8\n\
                    format = gnuplot\noutput = out.dat\n";
        let cfg = parse_config(text).unwrap();
        assert_eq!(cfg.material, MaterialParams::new(1e16, 1e8, 1e-14).unwrap());
        assert_eq!(cfg.sweep.variant, ModelVariant::FullKd);
        assert_eq!(cfg.sweep.theta, ParamValues::Family(vec![0.0, 0.5, 1.0]));
        assert_eq!(cfg.sweep.g, Complex64::new(0.8, 0.1));
        assert_eq!(cfg.sweep.rel_tol, 1e-8);
        assert_eq!(cfg.format, OutputFormat::Gnuplot);
        assert_eq!(cfg.output, Some(PathBuf::from("out.dat")));
    }

    #[test]
    fn collects_every_error_with_lines() {
        let text = "preset = fig1\nbogus = 3\nd = 1e-6\nnot an assignment\nvariant = quick\npreset = fig2\n";
        let errs = errors(text);
        let lines: Vec<_> = errs.iter().map(|e| e.line).collect();
        assert_eq!(
            lines,
            vec![Some(2), Some(3), Some(4), Some(5), Some(6)],
            "{errs:?}"
        );
        assert!(errs[0].message.contains("unknown key `bogus`"));
        assert!(errs[1].message.contains("cannot be combined"));
        assert!(errs[2].message.contains("syntax error"));
        assert!(errs[3].message.contains("unknown variant"));
        assert!(errs[4].message.contains("duplicate key"));
    }

    #[test]
    fn missing_keys_and_bad_combinations() {
        let errs = errors("d = 1e-6, 2e-6\np = 0.1, 0.2\nomega_min = 5\nomega_max = 1\n");
        let text = ConfigErrors(errs).to_string();
        assert!(text.contains("missing required key `omega_count`"), "{text}");
        assert!(text.contains("at most one"), "{text}");
        assert!(text.contains("must exceed"), "{text}");
    }

    #[test]
    fn custom_material_needs_all_constants() {
        let text = ConfigErrors(errors("material = custom\nomega_p = 1e16\npreset = fig1")).to_string();
        assert!(text.contains("requires `v_fermi`"));
        assert!(text.contains("requires `tau`"));
        let text = ConfigErrors(errors("tau = 1e-14\npreset = fig1")).to_string();
        assert!(text.contains("only valid with `material = custom`"));
    }

    #[test]
    fn range_checks() {
        for (text, needle) in [
            ("preset = fig1\nrel_tol = 1e-2", "rel_tol"),
            (
                "omega_min=0\nomega_max=1e15\nomega_count=1\nd=1e-6\np=0",
                "omega_count",
            ),
            ("omega_min=0\nomega_max=1e15\nomega_count=5\nd=-1e-6\np=0", "`d`"),
            (
                "omega_min=0\nomega_max=1e15\nomega_count=5\nd=1e-6\np=0\ntheta=2",
                "pi/2",
            ),
            (
                "omega_min=x\nomega_max=1e15\nomega_count=5\nd=1e-6\np=0",
                "invalid number",
            ),
            ("preset = fig10", "unknown preset"),
            ("preset = fig1\nformat = xml", "format"),
        ] {
            let msg = ConfigErrors(errors(text)).to_string();
            assert!(msg.contains(needle), "{text:?}: {msg}");
        }
    }
}
