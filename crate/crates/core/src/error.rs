use thiserror::Error;

/// Errors raised by the library. The CLI maps `Parse` to exit code 2 and
/// every other variant to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("residue is only defined on the ring of integers (valuation {0} < 0)")]
    DomainError(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix does not have determinant 1")]
    DeterminantNotOne,
    #[error("matrix is not diagonal")]
    NotDiagonal,
    #[error("vector has no finite entry")]
    AllInfinite,
    #[error("finite coordinates required, found -inf at index {0}")]
    InfiniteCoordinate(usize),
    #[error("point lies outside the star of the origin")]
    OutOfStar,
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("|lambda| = {lambda} differs from |mu| = {mu}")]
    WeightMismatch { lambda: usize, mu: usize },
    #[error("partition has {parts} nonzero parts but only {n} variables")]
    TooManyParts { parts: usize, n: usize },
    #[error("parts must be weakly decreasing")]
    NotAPartition,
    #[error("bialternant needs pairwise distinct arguments")]
    RepeatedValues,
    #[error("Weyl element type does not match the group of the character")]
    TypeMismatch,
    #[error("weight is not a vertex of the weight polytope")]
    NotAVertex,
    #[error("invalid fan direction: {0}")]
    InvalidDirection(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("plotting needs a rank-2 apartment, got rank {0}")]
    UnsupportedRank(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
