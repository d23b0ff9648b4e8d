use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1} variables")]
    RingMismatch(usize, usize),
    #[error("module order mismatch")]
    OrderMismatch,
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("monomial ideal is not strongly stable")]
    NotStable,
    #[error("generic initial ideal did not stabilise after {0} attempts")]
    GinDisagreement(usize),
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
    #[error("construction input rejected: {0}")]
    BadConstruction(String),
    #[error("not a curve: {0}")]
    NotACurve(String),
    #[error("ideal is not saturated")]
    NotSaturated,
    #[error("curve is degenerate (its ideal contains a linear form)")]
    Degenerate,
    #[error("no admissible hyperplane found after {0} draws")]
    HyperplaneExhausted(usize),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
