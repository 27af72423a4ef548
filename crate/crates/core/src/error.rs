use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial division leaves a nonzero remainder")]
    NonDivisible,

    #[error("predicate is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("parameters out of range: {0}")]
    OutOfRange(String),

    #[error("invalid word family: {0}")]
    InvalidFamily(String),

    #[error("invalid binary word {0:?}: only the characters 0 and 1 are allowed")]
    InvalidWord(String),

    #[error("word {word} is not in the image of {map}")]
    NotInImage { map: &'static str, word: String },

    #[error("parts {0:?} are not a weakly decreasing sequence")]
    InvalidPartition(Vec<usize>),

    #[error("partition {partition} does not fit in a {rows}x{cols} box")]
    OutOfBox {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("invalid difference parameters: {0}")]
    InvalidSpec(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("bound {requested} for check `{check}` exceeds the safe limit {limit}")]
    BoundsTooLarge {
        check: &'static str,
        requested: u32,
        limit: u32,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
