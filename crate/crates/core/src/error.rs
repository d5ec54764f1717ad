use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division left a nonzero remainder.
    #[error("polynomial is not divisible: {0}")]
    NonDivisible(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("weight parameters must be positive, got l1={l1}, l2={l2}")]
    InvalidWeight { l1: i64, l2: i64 },

    #[error("summation bound missing for variable {0}")]
    Unbounded(String),

    #[error("exponent is not affine-integral in {var}: {detail}")]
    NonAffine { var: String, detail: String },

    #[error("parity condition still involves a free variable: {0}")]
    UnresolvedParity(String),

    #[error("free variable {0} left after specialization")]
    FreeVariable(String),

    #[error("symbolic term limit of {0} exceeded")]
    TermLimit(usize),

    #[error("invalid serialized data: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
