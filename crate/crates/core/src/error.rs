use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("constant term of the divisor is not a nonzero rational")]
    NonInvertibleConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonZeroConstantTerm,
    #[error("series cannot be reverted: {0}")]
    ReversionPrecondition(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),
    #[error("unknown sequence id {0:?}")]
    UnknownSequence(String),
    #[error("parse error: {0}")]
    Parse(String),
}
