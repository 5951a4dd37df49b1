use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("epsilon matrix is not symmetric: entry ({row},{col}) differs from ({col},{row})")]
    NotSymmetric { row: usize, col: usize },

    #[error("epsilon matrix has a nonzero diagonal entry at ({index},{index})")]
    NonzeroDiagonal { index: usize },

    #[error("entry ({row},{col}) is {value}, expected 0 or 1")]
    NotBit { row: usize, col: usize, value: i64 },

    #[error("bad shape: {0}")]
    Shape(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("index value {value} is outside 1..={n}")]
    IndexOutOfRange { value: usize, n: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("block {block} carries more than one index value")]
    MixedBlock { block: String },

    #[error("cumulant specification is not identically distributed")]
    NotIdenticallyDistributed,

    #[error("n = {n} exceeds the brute-force bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("partition {partition} is not in category {category}")]
    NotInCategory { partition: String, category: String },

    #[error("algorithm exceeded its step cap of {cap} on {partition}")]
    StepCapExceeded { cap: usize, partition: String },

    #[error("neither a noncrossing subpartition nor a Case-2 index exists in {0}")]
    NoMove(String),

    #[error("invalid rational `{0}`")]
    InvalidRational(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
