use thiserror::Error;

/// Errors raised by the algebraic and coding routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} is outside the supported range [2, 65536)")]
    ModulusOutOfRange(u32),
    #[error("field mismatch: F_{left} vs F_{right}")]
    FieldMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("polynomial is reducible over F_{0}")]
    Reducible(u32),
    #[error("degree bound violated: degree {degree} must be below {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("zero functional is never a trace")]
    ZeroFunctional,
    #[error("functional is not a trace (Gram matrix is singular)")]
    NotATrace,
    #[error("elements do not form a basis (discriminant is zero)")]
    NotABasis,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("guard `{guard}` exceeded: {required} > {limit}")]
    GuardExceeded {
        guard: &'static str,
        required: u128,
        limit: u128,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("code is not linear: {0} codewords is not a power of {1}")]
    NotLinear(usize, u32),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
