use thiserror::Error;

/// Errors raised by the geometry, trigonometry and solver layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("circles {pair} have no intersection in the upper half-plane")]
    MissingIntersection { pair: &'static str },

    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(String),

    #[error("non-canonical configuration: {0}")]
    NonCanonical(String),

    #[error("inconsistent configuration: {0}")]
    Inconsistent(String),

    #[error("division-degenerate: {0}")]
    DivisionDegenerate(String),

    #[error("near-axis endpoint: {0}")]
    NearAxis(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("infeasible side lengths: {0}")]
    Infeasible(String),

    #[error("gauge-degenerate: {0}")]
    GaugeDegenerate(String),

    #[error("no convergence after {iterations} iterations (last residual {residual:e})")]
    Convergence { iterations: usize, residual: f64 },

    #[error("sampler exhausted after {0} consecutive rejections")]
    SamplerExhausted(usize),

    #[error("quadrature budget of {0} evaluations exceeded")]
    QuadratureBudget(usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_)
            | Error::NearAxis(_)
            | Error::Precondition(_)
            | Error::Inconsistent(_)
            | Error::InvalidInput(_) => 2,
            Error::DegenerateInput(_)
            | Error::MissingIntersection { .. }
            | Error::DegenerateTriangle(_)
            | Error::NonCanonical(_)
            | Error::DivisionDegenerate(_)
            | Error::Infeasible(_)
            | Error::GaugeDegenerate(_) => 3,
            Error::Convergence { .. } | Error::SamplerExhausted(_) | Error::QuadratureBudget(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
