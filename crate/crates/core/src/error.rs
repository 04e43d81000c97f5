use alloc::string::String;

/// Everything that can go wrong inside the algebra kernel and the geometric
/// pipeline built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("point has {got} coordinates, ring has {expected} variables")]
    PointLength { expected: usize, got: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("target degree {target} is below the polynomial degree {degree}")]
    DegreeTooLow { target: u32, degree: u32 },
    #[error("linear form is identically zero")]
    ZeroForm,
    #[error("expected a linear form: {0}")]
    NotLinear(String),
    #[error("coordinate change is singular or has the wrong size")]
    SingularMatrix,
    #[error("could not satisfy the vanishing constraint with nonzero coefficients")]
    ConstraintUnsatisfiable,
    #[error("expected a zero-dimensional ideal, found dimension {dim}")]
    PositiveDimensional { dim: i64 },
    #[error("the zero ideal or the zero polynomial is not allowed here")]
    ZeroInput,
    #[error("reduction step budget of {limit} exhausted")]
    BudgetExceeded { limit: u64 },
    #[error("generic sampling did not stabilise: {0}")]
    GenericityFailure(String),
    #[error("hyperplane is not admissible: {0}")]
    NonAdmissible(String),
    #[error("the hyperplane is contained in the hypersurface")]
    HyperplaneInHypersurface,
    #[error("cluster is not a point of the scheme")]
    ClusterNotOnScheme,
    #[error("point is not an isolated point of the scheme")]
    NotIsolated,
    #[error("point does not satisfy the required condition: {0}")]
    BadPoint(String),
    #[error("exact division failed")]
    InexactDivision,
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = core::result::Result<T, Error>;
