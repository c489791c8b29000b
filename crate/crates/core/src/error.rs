use thiserror::Error;

/// Errors raised by the group engine and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation image array: {0}")]
    InvalidPermutation(String),

    #[error("{what} exceeds the configured order cap of {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("not a normal subgroup: conjugating {element} by {by} leaves the subgroup")]
    NotNormal { element: String, by: String },

    #[error("element {0} does not belong to the group")]
    NotInGroup(String),

    #[error("vectors belong to different group algebras")]
    AlgebraMismatch,

    #[error("{0} does not stabilize the invariant span")]
    NotStabilizing(String),

    #[error("group is not centerless (center of order {0})")]
    NotCenterless(usize),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("catalog error on line {line}: {msg}")]
    Catalog { line: usize, msg: String },

    #[error("unknown group: {0}")]
    UnknownGroup(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
