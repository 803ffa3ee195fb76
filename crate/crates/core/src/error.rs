use alloc::string::String;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// One-based line number, or 0 when the input is a single expression.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }

    pub fn at_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial has terms of mixed degree ({0} and {1})")]
    MixedDegree(usize, usize),
    #[error("polynomial is not in the span of c and d; residual {residual}")]
    NotCdExpressible { residual: String },
    #[error("odd coefficient in {what}; halving requires every coefficient to be even")]
    OddCoefficient { what: String },
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("elements {0} and {1} are not comparable")]
    Incomparable(usize, usize),
    #[error("invalid rank selection: {0}")]
    InvalidRankSelection(String),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("arrangement is not essential: {0}")]
    NotEssential(String),
    #[error("arrangement is central; this operation needs a non-central arrangement")]
    Central,
    #[error("arrangement is not central; this operation needs a central arrangement")]
    NotCentral,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid hyperplane: {0}")]
    InvalidHyperplane(String),
    #[error("q = {q} is not a multiple of N = {n}")]
    GridNotMultiple { q: String, n: String },
    #[error("formulas disagree: {0}")]
    Inconsistent(String),
    #[error("subdivision is not regular: {0}")]
    NotRegular(String),
    #[error("regions are not open balls: {0}")]
    NotBalls(String),
    #[error("instance exceeds the size cap: {0}")]
    TooLarge(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
