use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // finite fields
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("field of size {size} exceeds the configured cap {cap}")]
    FieldTooLarge { size: u64, cap: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields (GF({left}) vs GF({right}))")]
    FieldMismatch { left: u32, right: u32 },

    // polynomials and rings
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("invalid grading matrix: {0}")]
    BadGrading(String),
    #[error("degree piece is infinite: variable {0} has zero degree")]
    UnboundedDegreePiece(usize),
    #[error("operation requires a graded ring")]
    NotGraded,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomials belong to different rings")]
    RingMismatch,

    // Gröbner engine
    #[error("resource budget exceeded: {0}")]
    ResourceBudgetExceeded(String),
    #[error("ideal is not homogeneous for the grading")]
    NonHomogeneousIdeal,

    // lattices
    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("support must be nonempty")]
    EmptySupport,
    #[error("point has a zero coordinate at index {0} inside its support")]
    ZeroCoordinateOnSupport(usize),

    // vanishing pipelines
    #[error("denominator g_{0} is the zero polynomial")]
    InvalidDenominator(usize),
    #[error("irrelevant ideal generator `{0}` is not a squarefree monomial")]
    NotSquarefree(String),
    #[error("bad weights: {0}")]
    BadWeights(String),
    #[error("{r} variables exceed the subset-enumeration cap {cap}")]
    TooManyVariables { r: usize, cap: usize },
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    // codes
    #[error("evaluation point set is empty")]
    EmptyPointSet,
}
