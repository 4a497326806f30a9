use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid {name} = {value}: expected {expected}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("degenerate denominator in {context} (|denominator| = {modulus:e})")]
    DegenerateDenominator { context: &'static str, modulus: f64 },

    #[error("Fuchs integral did not converge after {evaluations} evaluations (estimated relative error {estimated_error:e})")]
    NonConvergence {
        evaluations: usize,
        estimated_error: f64,
    },

    #[error("{operation} is not defined for the {variant} variant")]
    UnsupportedVariant {
        operation: &'static str,
        variant: &'static str,
    },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("no curve with family value {0}")]
    UnknownFamilyValue(f64),

    #[error("sweep point omega = {omega:e}, d = {d:e}, theta = {theta}, p = {p} failed: {source}")]
    SweepPoint {
        omega: f64,
        d: f64,
        theta: f64,
        p: f64,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True for failures of the numerics (quadrature, singular formulas) as
    /// opposed to rejected inputs.
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::DegenerateDenominator { .. } | Error::NonConvergence { .. } => true,
            Error::SweepPoint { source, .. } => source.is_numerical(),
            _ => false,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
