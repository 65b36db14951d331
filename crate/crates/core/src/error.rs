use thiserror::Error;

/// Errors raised by the invariant engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("coefficient index {index} exceeds truncation order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("series is not invertible: constant term is zero")]
    NotInvertible,

    /// Two independent computation routes produced different values. Always a bug.
    #[error("route disagreement for {quantity}: {detail}")]
    RouteDisagreement { quantity: String, detail: String },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("classes belong to different rings")]
    RingMismatch,

    #[error("symmetric power of rank {rank} exceeds the enumeration budget {budget}")]
    BudgetExceeded { rank: usize, budget: usize },

    #[error("class is not reduced modulo the projective bundle relation (degree {0} in the fiber generator)")]
    Unreduced(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
