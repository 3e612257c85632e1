use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator {denominator} vanishes at w = {at}")]
    Pole { denominator: String, at: String },
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    #[error("coefficient of q^{k} requested beyond truncation order {order}")]
    BeyondTruncation { k: i64, order: i64 },
    #[error("not formally summable: {0}")]
    NotFormallySummable(String),
    #[error("degenerate factor: {0}")]
    DegenerateFactor(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("`{name}` does not support the {regime} regime: {reason}")]
    UnsupportedRegime {
        name: String,
        regime: String,
        reason: String,
    },
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: i64, cap: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid term: {0}")]
    InvalidTerm(String),
}

pub type Result<T> = std::result::Result<T, QError>;
