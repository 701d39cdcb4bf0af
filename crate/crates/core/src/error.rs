use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("sublattice has corank {found}, expected {expected}")]
    WrongCorank { expected: usize, found: usize },
    #[error("malformed fan: {0}")]
    MalformedFan(String),
    #[error("fan is not smooth: {0}")]
    NotSmooth(String),
    #[error("fan is not good: {0}")]
    NotGood(String),
    #[error("cone {0:?} is not a top-dimensional cone of the fan")]
    NotTopCone(Vec<usize>),
    #[error("fan is not a surface fan (ambient rank {0})")]
    NotSurface(usize),
    #[error("fan is not proper")]
    NotProper,
    #[error("fans are not related by a single ray reversal: {0}")]
    NotSingleFlip(String),
    #[error("ambient lattice ranks differ ({left} vs {right})")]
    RankMismatch { left: usize, right: usize },
    #[error("star of cone {0:?} is not connected through walls")]
    DisconnectedStar(Vec<usize>),
    #[error("no smooth witness for singular element {0}")]
    WitnessNotFound(String),
    #[error("designated block is not invertible")]
    NotInvertibleBlock,
    #[error("not a complex: differentials out of degree {degree} and the next do not compose to zero")]
    NotAComplex { degree: usize },
    #[error("group is not contained in SL: weight sum {0} is not an integer")]
    NotInSL(String),
    #[error("cell {0:?} is not unimodular")]
    NotUnimodular(Vec<usize>),
    #[error("flips are only implemented for 2-dimensional simplices (got dimension {0})")]
    NotDim2(usize),
    #[error("illegal flip: {0}")]
    IllegalFlip(String),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
