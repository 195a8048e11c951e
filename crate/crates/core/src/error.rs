use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element of degree {degree} is not regular at q = infinity")]
    NotInLattice { degree: i64 },
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("crystal exceeds the vertex budget of {budget}")]
    BudgetExceeded { budget: usize },
    #[error("unsupported export format `{0}`")]
    UnsupportedFormat(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
