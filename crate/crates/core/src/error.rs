use thiserror::Error;

use crate::tableau::Square;

/// Errors raised by tableau construction, validation and parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("parts {0:?} do not form a strict partition")]
    NotStrict(Vec<u32>),
    #[error("empty word is not a hook word")]
    EmptyWord,
    #[error("primed entry at {0} is not allowed here")]
    PrimedEntry(Square),
    #[error("cell {0} is not a singleton")]
    NotSingleValued(Square),
    #[error("cell {0} is empty")]
    EmptyCell(Square),
    #[error("cell {0} repeats an entry other than 1")]
    IllegalRepeat(Square),
    #[error("row {row} has {found} cells but the shape needs {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("tableau has {found} rows but the shape needs {expected}")]
    RowCount { expected: usize, found: usize },
    #[error("entry {0} is out of range")]
    BadEntry(String),
    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },
}

/// Contract violations raised by crystal operators.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("tableau is not a member of {0}")]
    NotMember(&'static str),
    #[error("index {index} is outside the allowed range for n = {n}")]
    BadIndex { index: usize, n: usize },
    #[error("tensor factors disagree: {0}")]
    Mismatch(String),
    #[error("element set is not closed: {0}")]
    NotClosed(String),
    #[error("saturation exceeded {0} vertices")]
    TooManyVertices(usize),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// Errors raised by the polynomial engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial is not symmetric in x{0} and x{1}")]
    NotSymmetric(usize, usize),
    #[error("expansion up to degree {degree} needs at least {degree} variables, got {n}")]
    TooFewVariables { n: usize, degree: usize },
    #[error("polynomials disagree: {0}")]
    Mismatch(String),
    #[error("bad polynomial input: {0}")]
    Parse(String),
}
