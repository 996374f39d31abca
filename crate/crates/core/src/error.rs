use thiserror::Error;

/// Errors surfaced by algebra construction and the operations on elements,
/// good sequences and group elements.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An element was used with an algebra it does not belong to.
    #[error("element/algebra tag mismatch: {0}")]
    TagMismatch(String),

    /// A value is not in the carrier of the algebra.
    #[error("value {0} is not in the carrier")]
    NotInCarrier(String),

    /// Structural problem while building an algebra.
    #[error("construction error: {0}")]
    Construction(String),

    /// Text format problem; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The operation is not defined for this algebra shape.
    #[error("unsupported algebra shape: {0}")]
    UnsupportedShape(String),

    /// A decision strategy was used outside the class of algebras where it
    /// is sound.
    #[error("strategy misuse: {0}")]
    StrategyMisuse(String),

    /// Index out of range (projections, factors).
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    /// A request exceeds a configured size cap.
    #[error("refused: {0}")]
    TooLarge(String),

    /// A term or equation could not be parsed.
    #[error("malformed term: {0}")]
    MalformedTerm(String),

    /// A morphism failed validation and cannot be used.
    #[error("morphism validation failed: {0}")]
    InvalidMorphism(String),
}

pub type Result<T> = std::result::Result<T, Error>;
