use std::fmt;

use thiserror::Error;

/// The parameter constraint that a `(alpha, beta)` pair failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// `alpha + beta = 1`: the ladder operators and `mu` are undefined.
    SumEqualsOne,
    /// `alpha + beta >= 1`.
    SumTooLarge,
    /// `4 alpha beta >= 1`.
    ProductTooLarge,
    /// A parameter is NaN or infinite.
    NonFinite,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Constraint::SumEqualsOne => "alpha+beta=1",
            Constraint::SumTooLarge => "alpha+beta>=1",
            Constraint::ProductTooLarge => "4*alpha*beta>=1",
            Constraint::NonFinite => "finite alpha, beta",
        };
        f.write_str(s)
    }
}

/// Failures of the special-function routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialFunctionError {
    #[error("pole of {function} at {re}{im:+}i")]
    Pole {
        function: &'static str,
        re: f64,
        im: f64,
    },
    #[error("connection formula is degenerate: b - a = {0} is an integer")]
    DegenerateConnection(f64),
    #[error("{function}: series did not converge within {terms} terms")]
    ConvergenceFailure { function: &'static str, terms: usize },
    #[error("{function}: asymptotic expansion diverged before reaching working precision at z = {z}")]
    AsymptoticDivergence { function: &'static str, z: f64 },
    #[error("{function}: argument z = {re}{im:+}i lies outside the supported region")]
    UnsupportedRegion {
        function: &'static str,
        re: f64,
        im: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("constraint violated: {which}")]
    ConstraintViolation { which: Constraint },
    #[error("rho^-1 overflows at x = {x}: |mu * int W| = {exponent:.3e} exceeds the exponent range")]
    Overflow { x: f64, exponent: f64 },
    #[error("rho^-1 overflows at x = {x} (|exponent| = {exponent:.3e}); try a smaller window, x_min = {x_min:.6}, x_max = {x_max:.6}")]
    WindowOverflow {
        x: f64,
        exponent: f64,
        x_min: f64,
        x_max: f64,
    },
    #[error("grid too coarse: {n_points} points (need at least {required})")]
    GridTooCoarse { n_points: usize, required: usize },
    #[error("invalid grid: x_min = {x_min}, x_max = {x_max}")]
    InvalidGrid { x_min: f64, x_max: f64 },
    #[error("grid functions live on different grids")]
    GridMismatch,
    #[error("wavenumber must be finite and positive, got {0}")]
    InvalidWavenumber(f64),
    #[error("invalid model parameter: {0}")]
    InvalidModel(String),
    #[error("model has no bound states")]
    NoBoundStates,
    #[error("eigenvector amplitude at the walls is {amplitude:.3e} relative to its peak; enlarge the window")]
    WindowTooSmall { amplitude: f64 },
    #[error("potential has not flattened at x = {x}: |V(x) - V(edge)| = {deviation:.3e}")]
    NonAsymptoticWindow { x: f64, deviation: f64 },
    #[error("eigensolver failed to converge: {0}")]
    EigenConvergence(String),
    #[error("only {found} envelope points in the fit window (need at least 3)")]
    InsufficientPeaks { found: usize },
    #[error(transparent)]
    SpecialFunction(#[from] SpecialFunctionError),
    #[error("config: {0}")]
    Config(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
