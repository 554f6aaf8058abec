use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order exceeds the configured maximum of {max} (reached at least {reached})")]
    ClosureLimitExceeded { reached: usize, max: usize },

    #[error("generator {index} is not a permutation: {reason}")]
    InvalidPermutation { index: usize, reason: String },

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("action of K-element {k} is not an automorphism of H")]
    ActionNotAutomorphism { k: usize },

    #[error("action is not a homomorphism: action[{k1}*{k2}] != action[{k1}] o action[{k2}]")]
    ActionNotHomomorphism { k1: usize, k2: usize },

    #[error("subgroup is not normal (conjugation by element {by} moves it)")]
    NotNormal { by: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (size {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("algebra closure exceeded the entry cap: {entries} > {cap}")]
    DimensionLimitExceeded { entries: usize, cap: usize },

    #[error("class {class} is a singleton; the block formula divides by |C|-1")]
    SingletonClass { class: usize },

    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("invalid group spec: {0}")]
    Spec(String),
}

impl Error {
    /// True for the errors that signal a group or algebra too large for the configured limits.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ClosureLimitExceeded { .. } | Error::DimensionLimitExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
