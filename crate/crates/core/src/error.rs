use thiserror::Error;

/// Errors raised across the library. Points in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} is out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),

    #[error("malformed cycle notation at byte {position}: {reason}")]
    Malformed { position: usize, reason: &'static str },

    #[error("images do not form a bijection")]
    NotBijection,

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("group order {order} exceeds enumeration budget {budget}")]
    BudgetExceeded { order: String, budget: u64 },

    #[error("group is not transitive")]
    NotTransitive,

    #[error("split is not a union of orbits: {0}")]
    NotOrbitClosed(String),

    #[error("invalid isomorphism: {0}")]
    InvalidIsomorphism(String),

    #[error("subdirect sum invariant violated: {0}")]
    SubdirectInvariant(String),

    #[error("unknown group name `{0}`")]
    UnknownName(String),

    #[error("cannot identify constituent: {0}")]
    Unidentifiable(String),

    #[error("invalid group spec: {0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
