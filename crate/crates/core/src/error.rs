use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("non-collinear move: points {a} and {b} share no line")]
    NonCollinear { a: usize, b: usize },

    #[error("invalid design: {0}")]
    InvalidDesign(String),

    #[error("hypergraph is not pliable: lines {first:?} and {second:?} share three points")]
    NotPliable { first: [u32; 4], second: [u32; 4] },

    #[error("hypergraph is not connected")]
    Disconnected,

    #[error("not a supersimple design: {0}")]
    NotSupersimple(String),

    #[error("enumeration budget exceeded: {what} needs {needed} > budget {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    #[error("point set is not invariant under the group")]
    NonInvariant,

    #[error("group is not transitive on the given point set")]
    Intransitive,

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("invalid pliable function: {0}")]
    InvalidPliable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
