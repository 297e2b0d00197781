use thiserror::Error;

/// Errors produced by the geometry engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("resultant undefined: both polynomials are zero")]
    UndefinedResultant,
    #[error("degree error: {0}")]
    Degree(String),
    #[error("zero polynomial: {0}")]
    ZeroPolynomial(&'static str),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("cache invalid: {0}")]
    CacheInvalid(String),
    #[error("singular curve: {0}")]
    SingularCurve(String),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is not a flex")]
    NotAFlex,
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("input is not reduced")]
    NonReduced,
    #[error("input is reducible over the rationals")]
    Reducible,
    #[error("resolution depth exceeded ({0} blow-ups)")]
    DepthExceeded(usize),
    #[error("curves share a common component")]
    CommonComponent,
    #[error("infinitely-near trees do not match")]
    TreeMismatch,
    #[error("degenerate family: {0}")]
    DegenerateFamily(String),
    #[error("family is not equisingular at the sampled parameters")]
    NotEquisingular,
    #[error("degenerate pencil: discriminant vanishes identically")]
    DegeneratePencil,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("fixture verification failed: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
