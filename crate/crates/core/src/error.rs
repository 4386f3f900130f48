use thiserror::Error;

/// Errors raised by the exact group arithmetic and the classifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exponent or coordinate left the signed 64-bit range.
    #[error("arithmetic capacity exceeded: exponent overflow")]
    Overflow,
    /// `epsilon` (and the conjugate decomposition) only accept words with zero exponent sums.
    #[error("word is not balanced: exponent sums are ({ex}, {ey})")]
    Unbalanced { ex: i64, ey: i64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("cannot combine braids of different bundle kinds")]
    KindMismatch,
    #[error("cannot combine group elements with different monodromies or bases")]
    MonodromyMismatch,
    #[error("unsupported monodromy {0}")]
    UnsupportedMonodromy(String),
    #[error("not an invertible integer matrix (determinant {0})")]
    NotInvertible(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("search would enumerate {candidates} candidates, budget is {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    exp_ok(a.checked_add(b))
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    exp_ok(a.checked_sub(b))
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    exp_ok(a.checked_mul(b))
}

// i64::MIN is excluded so that negation never overflows.
fn exp_ok(v: Option<i64>) -> Result<i64> {
    match v {
        Some(v) if v != i64::MIN => Ok(v),
        _ => Err(Error::Overflow),
    }
}
