use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Line { line: usize, reason: String },
    #[error("arc multiplicity: arc {arc} appears {count} times (expected 2)")]
    ArcMultiplicity { arc: i64, count: usize },
    #[error("inconsistent traversal: {0}")]
    Traversal(String),
    #[error("cannot parse polynomial {text:?}: {reason}")]
    Polynomial { text: String, reason: String },
    #[error("braid: {0}")]
    Braid(String),
    #[error("graph: {0}")]
    Graph(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KnotError {
    #[error("diagram has {crossings} crossings; the state-sum guard is {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },
    #[error("bracket exponents are not compatible with t = A^-4 (exponent {0})")]
    OddExponent(i64),
    #[error("braid has {strands} strands; the Temperley-Lieb guard is {limit}")]
    TooManyStrands { strands: usize, limit: usize },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("matrix is singular")]
    Singular,
    #[error("|Im z| = {0} exceeds the theta evaluation window 2")]
    OutsideWindow(f64),
    #[error("Gram matrix condition number {0:e} exceeds 1e8")]
    IllConditioned(f64),
    #[error("quadrature drift {drift:e} between refinement levels exceeds {limit:e}")]
    NotConverged { drift: f64, limit: f64 },
    #[error("Verlinde sum {value} is not within {tol:e} of an integer")]
    NotIntegral { value: String, tol: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CalibrationError {
    #[error("no convention is consistent: {0}")]
    NoneConsistent(String),
    #[error("several conventions are consistent: {0}")]
    Ambiguous(String),
    #[error("calibration record is inconsistent: {0}")]
    Inconsistent(String),
    #[error("calibration record unreadable: {0}")]
    Unreadable(String),
}
