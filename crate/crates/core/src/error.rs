use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// A sphere threshold above [`crate::sphere::MAX_T`].
    #[error("threshold {0} exceeds the supported cap of 2^32")]
    ThresholdCap(u64),

    /// `poly_mul` requires finite operands; restrict periodic ones first.
    #[error("cannot multiply periodic polynomials; restrict them first")]
    PeriodicOperand,

    /// Dense transforms only accept vectors whose length is a power of two.
    #[error("vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    /// Variable count above the cap for the requested operation.
    #[error("{n} variables exceeds the cap of {cap} for {what}")]
    VarCap {
        n: usize,
        cap: usize,
        what: &'static str,
    },

    /// Monomial expansion would exceed the memory budget.
    #[error("expansion of {monomials} monomials exceeds the budget of {budget}")]
    BudgetExceeded { monomials: u64, budget: u64 },

    /// Generator matrix whose rows are linearly dependent over F2.
    #[error("generator matrix is rank-deficient (rank {rank} < k = {k})")]
    RankDeficient { rank: usize, k: usize },

    /// A code map that does not send the zero message to the zero word.
    #[error("code map must satisfy F(0) = 0")]
    NonzeroOrigin,

    /// Malformed input file or text.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
