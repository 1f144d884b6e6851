use thiserror::Error;

/// Everything that can go wrong while building or evaluating bundle expressions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),

    #[error("weight {0:?} is not dominant")]
    NonDominant([i64; 3]),

    #[error("malformed partition ({0}, {1})")]
    MalformedPartition(i64, i64),

    #[error("product leaves the supported factor set: {0}")]
    OutsideFactorSet(String),

    #[error("negative rank {0} in a declared construction")]
    NegativeRank(i64),

    #[error("cohomology is indeterminate: {0}")]
    Indeterminate(String),

    #[error("declared facts are inconsistent: {0}")]
    InconsistentFacts(String),

    #[error("operation not supported: {0}")]
    Unsupported(String),

    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
