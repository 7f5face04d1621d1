use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("series has zero constant term and is not invertible")]
    NotInvertible,

    #[error("inner series of a composition must vanish at 0")]
    NonZeroInnerConstant,

    #[error("square root requires constant term 1")]
    SqrtConstantTerm,

    #[error("fixed-point kernel must have nonzero constant term")]
    DegenerateKernel,

    #[error("coefficient {index} requested from a series known to order {order}")]
    OutOfRange { index: i64, order: usize },

    #[error("operand order {have} is below the required order {need}")]
    InsufficientOrder { need: usize, have: usize },

    #[error("series of order 0 has no known derivative coefficients")]
    TruncationExhausted,

    #[error("expected an integer, got {0}")]
    NonInteger(String),

    #[error("{what}: expected {expected}, got {actual}")]
    Mismatch {
        what: String,
        expected: String,
        actual: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed parameters: {0}")]
    BadParams(String),

    #[error("enumeration requested for n = {n}, above the configured maximum {max}")]
    OracleCap { n: usize, max: usize },
}

impl Error {
    pub(crate) fn mismatch(
        what: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        Error::Mismatch {
            what: what.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}
