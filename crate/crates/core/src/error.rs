use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MobiusError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(i64),
    #[error("k = {k} is outside the admissible range for a = {a}")]
    KOutOfRange { a: i64, k: i64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not an element of the semigroup")]
    NotAMember(i64),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("(x0, x2) = ({x0}, {x2}) lies in the excluded corner {{0,1}}x{{0,1}}")]
    OutOfDomain { x0: i64, x2: i64 },
    #[error("method {method} is not applicable: {reason}")]
    MethodInapplicable {
        method: &'static str,
        reason: String,
    },
    #[error("grid too large: {0}")]
    GridTooLarge(String),
    #[error("integer overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, MobiusError>;
