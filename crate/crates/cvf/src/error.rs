use thiserror::Error;

use crate::complex::CellId;

/// Errors raised while reading fixture text.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown cell id `{id}`")]
    UnknownCell { line: usize, id: String },
    #[error("line {line}: duplicate cell `{id}`")]
    DuplicateCell { line: usize, id: String },
    #[error("line {line}: duplicate tail `{id}`: a cell can be matched at most once")]
    DuplicateTail { line: usize, id: String },
    #[error("cell `{cell}` lists face `{face}` of dimension {face_dim}, expected {expected}")]
    FaceDimensionMismatch {
        cell: String,
        face: String,
        face_dim: usize,
        expected: usize,
    },
    #[error("cell `{cell}` references missing face `{face}`")]
    DanglingFace { cell: String, face: String },
    #[error("cell `{cell}` repeats face `{face}`: irregular attachments are not supported")]
    IrregularFace { cell: String, face: String },
}

/// Errors raised by analysis operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown cell id `{0}`")]
    UnknownCell(CellId),
    #[error("cells `{0}` and `{1}` have different dimensions")]
    DimensionMismatch(CellId, CellId),
    #[error("boundary degree {got} out of range 1..={max}")]
    DegreeOutOfRange { got: usize, max: isize },
    #[error("matrix shapes do not compose: left is {lr}x{lc}, right is {rr}x{rc}")]
    ShapeMismatch { lr: usize, lc: usize, rr: usize, rc: usize },
    #[error("elementary cycle budget of {budget} exceeded while enumerating orbits")]
    CycleBudgetExceeded { budget: usize },
    #[error("V-path family from `{source}` to `{target}` does not terminate: a cycle lies on the route")]
    NonterminatingPathFamily { source: CellId, target: CellId },
    #[error("twisted-orbit detection needs vertex identities; complex is not simplicial")]
    UnsupportedForCw,
    #[error("no V-paths connect the generator pair")]
    EmptyVp,
    #[error("field violates the exclusion conditions; see the report")]
    ExclusionsViolated(crate::floer::ExclusionReport),
    #[error("boundary operator does not square to zero at degree {degree}: entry ({row}, {col})")]
    DSquaredNonzero {
        degree: usize,
        row: String,
        col: String,
    },
    #[error("`{0}` is not a cell of the orbit")]
    NotAnOrbitCell(CellId),
    #[error("`{0}` sits at the last position of the closed path and cannot be the split cell")]
    IllegalSplitPosition(CellId),
    #[error("field is not a gradient field: closed orbits remain")]
    NotGradient,
    #[error("chain map fails at ({src}, {dst}): boundary coefficient {left} vs {right}")]
    ChainMapMismatch {
        src: String,
        dst: String,
        left: u8,
        right: u8,
    },
    #[error("Morse inequality violated at k={k}: lhs {lhs} < rhs {rhs}")]
    InequalityViolated { k: usize, lhs: i64, rhs: i64 },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
