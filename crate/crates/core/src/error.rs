use std::fmt;

use thiserror::Error;

/// Syntax error in an element, scalar or permutation literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the input where parsing failed.
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.offset, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    SizeGuard {
        what: String,
        actual: usize,
        limit: usize,
    },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("ground sets differ: {0}")]
    GroundMismatch(String),

    #[error("generating set does not generate the group; unreached coset: {coset}")]
    NotGenerating { coset: String },

    #[error("map is not a homomorphism: {witness}")]
    NotHomomorphism { witness: String },

    #[error("map is not bijective: {witness}")]
    NotBijective { witness: String },

    #[error("automorphism is not an involution: {witness}")]
    NotInvolution { witness: String },

    #[error("group is not abelian: {witness}")]
    NotAbelian { witness: String },

    #[error("automorphisms are not intertwined by the given conjugator: {witness}")]
    NotConjugate { witness: String },

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("filtration condition ({condition}) fails: {witness}")]
    Filtration { condition: u8, witness: String },

    #[error("label `{0}` does not belong to this algebra")]
    UnknownLabel(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
