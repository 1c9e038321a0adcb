use thiserror::Error;

/// Errors raised by the ideal-arithmetic and invariant kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vector has {found} entries but the ring has {expected} variables")]
    VariableCount { expected: usize, found: usize },

    #[error("ring variables must be nonempty and pairwise distinct")]
    BadRing,

    #[error("exponent arithmetic overflow")]
    Overflow,

    #[error("operation requires a nonzero proper ideal")]
    NotProperNonzero,

    #[error("a monomial prime needs at least one variable")]
    EmptyPrime,

    #[error("variable index {index} out of range for a ring with {vars} variables")]
    VarIndexOutOfRange { index: usize, vars: usize },

    #[error("associated-prime search supports at most {max} variables")]
    TooManyVariables { max: usize },

    #[error("not an associated prime of the ideal")]
    NotAssociated,

    #[error(
        "internal consistency: an associated prime has no witness among the module generators"
    )]
    MissingWitness,

    #[error("ring has {found} variables; this operation needs exactly two")]
    NotTwoVariables { found: usize },

    #[error("staircase sequences must have equal nonzero length, a strictly decreasing, b strictly increasing")]
    BadStaircase,

    #[error("family parameters out of range: need slope >= 1 and intercept >= -1")]
    BadFamilyParams,

    #[error("need k_max >= window >= 1")]
    BadWindow,

    #[error("need min_run >= 2")]
    BadMinRun,

    #[error("need k_max >= {min}")]
    KMaxTooSmall { min: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
