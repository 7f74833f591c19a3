use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrmError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parameters too large: {0}")]
    ParamsTooLarge(String),
    #[error("element is not a unit")]
    NonUnit,
    #[error("divisor has a non-unit leading coefficient")]
    NonMonicDivisor,
    #[error("polynomial has a non-unit leading coefficient")]
    NonUnitLeading,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("no primitive polynomial of degree {0} found")]
    NoPrimitivePolynomial(usize),
    #[error("coefficient does not lie in the base ring")]
    CoefficientNotInBase,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("row module is not free")]
    NotFree,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("order {nu} out of range (maximum {max})")]
    OrderOutOfRange { nu: u32, max: u32 },
    #[error("value {0} out of range")]
    OutOfRange(u64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("enumeration of {size} words exceeds guard {guard}")]
    EnumerationTooLarge { size: String, guard: u64 },
}

pub type Result<T> = std::result::Result<T, GrmError>;
