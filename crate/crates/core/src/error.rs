use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("impulse loads cannot be sampled; they enter through initial conditions")]
    UnsupportedSampling,

    #[error("unsupported derivative order {0}: magnitude must be below 2")]
    UnsupportedOrder(f64),

    #[error("non-integrable singularity t^{0} in result")]
    Singularity(f64),

    #[error("accuracy loss: {0}")]
    AccuracyLoss(String),

    #[error("unrealizable load: {0}")]
    UnrealizableLoad(String),

    #[error("unsupported model/load pairing: {0}")]
    UnsupportedPairing(String),

    #[error("no closed-form response for {0}")]
    NoClosedForm(String),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("unsupported forcing: {0}")]
    UnsupportedForcing(String),

    #[error("insufficient samples: {0}")]
    InsufficientSamples(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
