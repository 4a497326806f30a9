//! CSV and gnuplot rendering of sweep results.

use std::fmt::{self, Write as _};
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_complex::Complex64;
use pwave_core::{ModelVariant, OpticalCoefficients, SweepResult, SweepRow};

pub const CSV_HEADER: &str = "omega,d,theta,p,T,R,A,sigma_d_re,sigma_d_im";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    /// Whitespace columns, one block per family value separated by two blank lines.
    Gnuplot,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "gnuplot" | "gnuplot-columns" => Ok(OutputFormat::Gnuplot),
            other => Err(format!("unknown format '{other}' (expected csv or gnuplot)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Gnuplot => "gnuplot",
        })
    }
}

#[derive(Debug, thiserror::Error)]
#[error("cannot write {}: {source}", path.display())]
pub struct WriteError {
    pub path: PathBuf,
    pub source: io::Error,
}

/// Nine significant digits. Plain decimals for 1e-3 ≤ |x| < 1e4, otherwise
/// scientific notation.
pub fn format_number(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.8e}");
    let exponent: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if x == 0.0 || (-3..4).contains(&exponent) {
        let decimals = (8 - exponent) as usize;
        let fixed = format!("{x:.decimals$}");
        // rounding can carry into the next decade
        if fixed.trim_start_matches('-').starts_with("10000.") {
            return sci;
        }
        fixed
    } else {
        sci
    }
}

fn row_fields(row: &SweepRow) -> [String; 9] {
    [
        row.omega,
        row.d,
        row.theta,
        row.p,
        row.t,
        row.r,
        row.a,
        row.sigma_d.re,
        row.sigma_d.im,
    ]
    .map(format_number)
}

pub fn render_csv(result: &SweepResult) -> String {
    let mut out = String::with_capacity(128 * (result.rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in &result.rows {
        out.push_str(&row_fields(row).join(","));
        out.push('\n');
    }
    out
}

pub fn render_gnuplot(result: &SweepResult) -> String {
    let (family, _) = result.spec.family();
    let mut out = String::with_capacity(128 * (result.rows.len() + 8));
    let _ = writeln!(out, "# variant: {}", result.spec.variant);
    let _ = writeln!(out, "# columns: {}", CSV_HEADER.replace(',', " "));
    for (i, (value, rows)) in result.curves().enumerate() {
        if i > 0 {
            out.push_str("\n\n");
        }
        let _ = writeln!(out, "# family: {} = {}", family, format_number(value));
        for row in rows {
            out.push_str(&row_fields(row).join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn render(result: &SweepResult, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => render_csv(result),
        OutputFormat::Gnuplot => render_gnuplot(result),
    }
}

/// Writes to `path`, or to `stdout` when no path is given.
pub fn emit(
    result: &SweepResult,
    format: OutputFormat,
    path: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<(), WriteError> {
    let text = render(result, format);
    match path {
        Some(path) => fs::write(path, text).map_err(|source| WriteError {
            path: path.to_path_buf(),
            source,
        }),
        None => stdout.write_all(text.as_bytes()).map_err(|source| WriteError {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

fn complex(z: Complex64) -> String {
    format!("{} {}", format_number(z.re), format_number(z.im))
}

fn optional(z: Option<Complex64>) -> String {
    z.map_or_else(|| "none".to_string(), complex)
}

/// `key = value` record for a single evaluation.
pub fn render_point(
    omega: f64,
    d: f64,
    theta: f64,
    p: f64,
    variant: ModelVariant,
    out: &OpticalCoefficients,
) -> String {
    let mut s = String::new();
    for (key, value) in [
        ("variant", variant.to_string()),
        ("omega", format_number(omega)),
        ("d", format_number(d)),
        ("theta", format_number(theta)),
        ("p", format_number(p)),
        ("T", format_number(out.t)),
        ("R", format_number(out.r)),
        ("A", format_number(out.a)),
        ("sigma_d", complex(out.sigma_d)),
        ("Z1", optional(out.z1)),
        ("Z2", complex(out.z2)),
        ("P1", optional(out.p1)),
        ("P2", complex(out.p2)),
    ] {
        let _ = writeln!(s, "{key} = {value}");
    }
    s
}
