use thiserror::Error;

/// Errors produced by constructions and estimators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian: relative defect {defect:.3e}")]
    NotHermitian { defect: f64 },

    #[error("matrix is not unitary: isometry defect {defect:.3e}")]
    NotUnitary { defect: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    EigNoConvergence { sweeps: usize },

    #[error("subspace invariant violated: {0}")]
    InvariantViolation(String),

    #[error("graph parse error: {0}")]
    GraphParse(String),

    #[error("exact value unavailable: {0}")]
    ExactUnavailable(String),

    #[error("budget misuse: {0}")]
    Budget(String),

    #[error("semidefinite program is infeasible (phase-I value {value:.3e})")]
    SdpInfeasible { value: f64 },

    #[error("solver iteration limit reached: {0}")]
    MaxIter(String),

    #[error("singular input: {0}")]
    Singular(String),

    #[error("certificate invalid: {0}")]
    Certificate(String),

    #[error("json error: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
