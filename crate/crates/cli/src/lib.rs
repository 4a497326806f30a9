//! Command-line front end for `pwave-core`.
//!
//! ```text
//! pwave run --config sweep.conf [--out FILE] [--format csv|gnuplot] [--threads N]
//! pwave preset --id fig1 [--out FILE] [--format csv|gnuplot] [--threads N]
//! pwave point --omega 1e14 --d 1e-6 --theta 0 --p 0.3 [--variant thin-kd] [--g 1]
//! ```
//!
//! Exit status: 0 on success, 1 for invalid input or I/O failure, 2 when the
//! numerics fail (degenerate denominator, quadrature budget exhausted).

pub mod config;
pub mod output;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use pwave_core::{
    evaluate_with_tol, run_sweep, run_sweep_with_threads, FigurePreset, FilmConfig, MaterialParams,
    ModelVariant, SweepResult, SweepSpec, WaveConfig,
};

pub use config::{parse_config, ConfigError, ConfigErrors, RunConfig};
pub use output::{format_number, render, OutputFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pwave",
    version,
    about = "p-wave transmission, reflection and absorption of thin metal films"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a sweep described by a configuration file.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        sink: Sink,
    },
    /// Run one of the built-in sodium sweeps (fig1 ... fig9).
    Preset {
        #[arg(long)]
        id: FigurePreset,
        #[command(flatten)]
        sink: Sink,
    },
    /// Evaluate a single point for sodium.
    Point {
        #[arg(long, allow_negative_numbers = true)]
        omega: f64,
        #[arg(long, allow_negative_numbers = true)]
        d: f64,
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, default_value = "thin-kd")]
        variant: ModelVariant,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        g: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        g_im: f64,
        #[arg(long, default_value_t = pwave_core::quadrature::DEFAULT_REL_TOL)]
        rel_tol: f64,
    },
}

#[derive(Debug, Args)]
struct Sink {
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<OutputFormat>,
    /// Worker threads; the global pool when omitted.
    #[arg(long)]
    threads: Option<usize>,
}

fn sweep(spec: &SweepSpec, threads: Option<usize>) -> pwave_core::Result<SweepResult> {
    match threads {
        Some(n) => run_sweep_with_threads(spec, n),
        None => run_sweep(spec),
    }
}

fn core_failure(err: &pwave_core::Error, stderr: &mut dyn Write) -> i32 {
    let _ = writeln!(stderr, "error: {err}");
    if err.is_numerical() {
        EXIT_NUMERICAL
    } else {
        EXIT_INVALID
    }
}

fn run_and_emit(
    spec: &SweepSpec,
    sink: &Sink,
    out: Option<PathBuf>,
    format: OutputFormat,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    if sink.threads == Some(0) {
        let _ = writeln!(stderr, "error: --threads must be at least 1");
        return EXIT_INVALID;
    }
    let result = match sweep(spec, sink.threads) {
        Ok(r) => r,
        Err(e) => return core_failure(&e, stderr),
    };
    let path = sink.out.clone().or(out);
    let format = sink.format.unwrap_or(format);
    match output::emit(&result, format, path.as_deref(), stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INVALID
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit status.
pub fn cli_main<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                return EXIT_INVALID;
            }
            let _ = write!(stdout, "{rendered}");
            return EXIT_OK;
        }
    };

    match cli.command {
        Command::Run { config, sink } => {
            let text = match fs::read_to_string(&config) {
                Ok(t) => t,
                Err(e) => {
                    let _ = writeln!(stderr, "error: cannot read {}: {e}", config.display());
                    return EXIT_INVALID;
                }
            };
            let cfg = match parse_config(&text) {
                Ok(c) => c,
                Err(errs) => {
                    for e in &errs.0 {
                        let _ = writeln!(stderr, "{}: {e}", config.display());
                    }
                    return EXIT_INVALID;
                }
            };
            run_and_emit(&cfg.sweep, &sink, cfg.output, cfg.format, stdout, stderr)
        }
        Command::Preset { id, sink } => {
            if let Some(note) = id.assumption() {
                let _ = writeln!(stderr, "note: {id}: {note}");
            }
            run_and_emit(&id.spec(), &sink, None, OutputFormat::Csv, stdout, stderr)
        }
        Command::Point {
            omega,
            d,
            theta,
            p,
            variant,
            g,
            g_im,
            rel_tol,
        } => {
            let material = MaterialParams::sodium();
            let inputs = FilmConfig::new(d, p)
                .and_then(|f| f.with_g(Complex64::new(g, g_im)))
                .and_then(|f| Ok((f, WaveConfig::new(omega, theta)?)));
            let (film, wave) = match inputs {
                Ok(v) => v,
                Err(e) => return core_failure(&e, stderr),
            };
            match evaluate_with_tol(&material, &film, &wave, variant, rel_tol) {
                Ok(out) => {
                    let text = output::render_point(omega, d, theta, p, variant, &out);
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                Err(e) => core_failure(&e, stderr),
            }
        }
    }
}
