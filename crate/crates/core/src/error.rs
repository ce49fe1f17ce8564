use thiserror::Error;

/// Errors raised by construction, certification and classification routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("unsupported Cartan type {0}")]
    UnsupportedType(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("structure constant for roots {0} and {1} is not an integer")]
    NonIntegralStructureConstant(usize, usize),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("map does not preserve the bracket on basis pair ({0}, {1})")]
    NotAutomorphism(usize, usize),
    #[error("diagram extension is inconsistent on basis pair ({0}, {1})")]
    ExtensionInconsistency(usize, usize),
    #[error("root {0} takes a non-integral value on the torus element")]
    NonIntegralPairing(String),
    #[error("{0} is not an involution")]
    NotInvolution(String),
    #[error("Klein four violation: {0}")]
    KleinFour(String),
    #[error("{0} and {1} do not commute")]
    NotCommuting(String, String),
    #[error("map {0} does not stabilize the standard Cartan subalgebra")]
    NotTorusStable(String),
    #[error("Cartan involution {0} is not a torus involution")]
    NotTorusInvolution(String),
    #[error("Cartan involution has no noncompact roots")]
    DegenerateCartanInvolution,
    #[error("real form is not of Hermitian type: center of the maximal compact has dimension {0}")]
    NotHermitian(usize),
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("subalgebra is not reductive: {0}")]
    NotReductive(String),
    #[error("simple ideals are not defined over the rationals")]
    NonRationalIdeal,
    #[error("expected a simple ideal, found {0}")]
    NotSimple(String),
    #[error("unrecognized Cartan matrix: {0}")]
    UnrecognizedCartan(String),
    #[error("no extraspecial decomposition of root {0}")]
    MissingDecomposition(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, LieError>;
