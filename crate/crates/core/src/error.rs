use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid modulus {0}: moduli must be 0 (integers) or at least 2")]
    InvalidModulus(String),
    #[error("a ring needs at least one component")]
    EmptyRing,
    #[error("expected {expected} components, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("incompatible ambient data: {0}")]
    Incompatible(String),
    #[error("not divisible")]
    NotDivisible,
    #[error("generator list is empty after dropping zero elements")]
    NoGenerators,
    #[error("input is not a certified Groebner basis")]
    Uncertified,
    #[error("iteration ceiling of {limit} critical elements reached with {basis_len} basis elements; raise the limit or simplify the input")]
    IterationLimit { limit: usize, basis_len: usize },
    #[error("oracle refused: {0}")]
    OracleRefused(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
