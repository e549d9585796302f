use thiserror::Error;

/// Failures raised by the library. Numeric failures carry the best estimate
/// available so callers can still report it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alpha = {0} is outside (1/2, 1]")]
    InvalidAlpha(f64),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("quadrature hit the subdivision limit ({subdivisions}); best value {value} with error {err_est}")]
    SubdivisionLimit {
        value: f64,
        err_est: f64,
        subdivisions: usize,
    },
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("sieve limit {0} outside [2, 1e8]")]
    LimitExceeded(u64),
    #[error("zero table covers height {coverage} but {required} is needed")]
    InsufficientCoverage { coverage: f64, required: f64 },
    #[error("von Mangoldt table reaches {limit} but {required} is needed")]
    TableTooSmall { limit: u64, required: u64 },
    #[error("|zeta({sigma} + {t}i)| = {modulus:e} is too close to a zero")]
    NearZeroSingularity { sigma: f64, t: f64, modulus: f64 },
    #[error("{file}:{line}: {msg}")]
    Parse { file: String, line: usize, msg: String },
    #[error("{file}: ordinate {value} does not increase (line {line})")]
    Monotonicity { file: String, line: usize, value: f64 },
    #[error("{0}: missing coverage_height= header")]
    MissingCoverage(String),
    #[error("malformed data file: {0}")]
    Format(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
