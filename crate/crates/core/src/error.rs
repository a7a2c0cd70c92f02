use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size limit exceeded: {what} would have {size} elements (cap {cap})")]
    SizeLimit { what: String, size: usize, cap: usize },

    #[error("invalid permutation: {0}")]
    Permutation(String),

    #[error("invalid group table: {0}")]
    GroupTable(String),

    #[error("{0} is not a subgroup")]
    NotASubgroup(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("invalid homomorphism: {0}")]
    Homomorphism(String),

    #[error("ambient group mismatch: {0}")]
    AmbientMismatch(String),

    #[error("invalid action: {0}")]
    Action(String),

    #[error("malformed biset data: {0}")]
    Biset(String),

    #[error("character table rejected: {0}")]
    CharacterTable(String),

    #[error("not a virtual character: {0}")]
    NotVirtualCharacter(String),

    #[error("field error: {0}")]
    Field(String),

    #[error("splitting field too small: {0}")]
    SplittingField(String),

    #[error("block data inconsistent: {0}")]
    Blocks(String),

    #[error("not an isometry: {0}")]
    NotIsometry(String),

    #[error("Broue invariant: {0}")]
    Invariant(String),

    #[error("sign extraction failed: {0}")]
    Sign(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
