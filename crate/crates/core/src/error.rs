use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Family/rank combination outside the simple classification.
    #[error("invalid root system spec: {0}")]
    InvalidSpec(String),

    /// An operation required a dominant weight and did not get one.
    #[error("non-dominant input: {0}")]
    NonDominantInput(String),

    /// A stated precondition was violated by the caller.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// Fixed-width exact arithmetic would have wrapped around.
    #[error("integer overflow in exact arithmetic")]
    Overflow,

    /// An enumeration exceeded the configured cap.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A campaign on E6/E7/E8 was requested without the heavy override.
    #[error("refused heavy computation: {0}")]
    RefusedHeavy(String),

    /// Two independent computations of the same quantity disagree.
    #[error("internal consistency error: {0}")]
    InternalInconsistency(String),
}
