use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree {0} is outside the supported range 1..=4")]
    DegreeOutOfRange(u32),
    #[error("field of size {0} exceeds the supported maximum of 256")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("the zero vector does not define a projective point")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("monomials {0} and {1} are identical")]
    DuplicateMonomial(usize, usize),
    #[error("support of monomial {0} is contained in the support of monomial {1}")]
    NotClutterType(usize, usize),
    #[error("edge {0} is contained in edge {1}")]
    EdgeContainment(usize, usize),
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("polynomial is not homogeneous")]
    NonHomogeneous,
    #[error("{what} requires {needed} steps, above the budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("internal consistency check failed: {0}")]
    Defect(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Whether the error reports a violated precondition of the caller's input
    /// rather than a resource limit or an internal failure.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::BudgetExceeded { .. } | Error::Defect(_))
    }
}
