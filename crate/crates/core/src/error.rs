use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("modulus must be at least {min}, got {got}")]
    InvalidModulus { min: u64, got: u64 },
    #[error("x -> {multiplier}x is not well defined from Z/{src} to Z/{dst}")]
    IllDefinedMap { src: u64, dst: u64, multiplier: i64 },
    #[error("modulus mismatch: expected {expected}, got {got}")]
    ModulusMismatch { expected: u64, got: u64 },
    #[error("cochain is not a cocycle in degree {degree}")]
    NotACocycle { degree: usize },
    #[error("unsupported cohomological degree {0}")]
    InvalidDegree(usize),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid linear constraint system: {0}")]
    InvalidSystem(String),
    #[error("search bound exceeded: {size} > {bound}")]
    BoundExceeded { size: u128, bound: u128 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid operator: {0}")]
    InvalidOperator(String),
    #[error("incomplete assignment: no operator for variable {0}")]
    IncompleteAssignment(String),
    #[error("operators in a solution must share one target")]
    MixedTargets,
    #[error("incompatible target: {0}")]
    IncompatibleTarget(String),
    #[error("determinant of {variable} is not a {d}-th root of unity")]
    NotRootOfUnity { variable: String, d: u64 },
    #[error("determinant identity violated: {0}")]
    DeterminantIdentity(String),
    #[error("operator solution does not verify")]
    UnverifiedSolution,
    #[error("complex is not a realization of the system: {0}")]
    RealizationMismatch(String),
    #[error("unsupported degree {degree} for {spectrum}")]
    UnsupportedDegree { spectrum: String, degree: u32 },
    #[error("unknown fixture {0}")]
    UnknownFixture(String),
}
