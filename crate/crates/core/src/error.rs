use thiserror::Error;

pub type Result<T, E = PosetError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("invalid element name `{0}` (must be non-empty without whitespace)")]
    InvalidName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("relation has a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("too many elements: {0} (at most {max})", max = crate::set::MAX_ELEMENTS)]
    TooManyElements(usize),
    #[error("poset has no unary operation")]
    MissingUnary,
    #[error("unary operation is not total: {0}")]
    NonTotalUnary(String),
    #[error("poset is not bounded")]
    Unbounded,
    #[error("declared {which} `{declared}` is not the {which} of the order")]
    BoundMismatch { which: &'static str, declared: String },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("operand missing: {0}")]
    MissingOperand(String),
    #[error("horizontal sum needs at least two blocks, got {0}")]
    TooFewBlocks(usize),
    #[error("block {block} has {size} elements, horizontal sum blocks need more than 2")]
    BlockTooSmall { block: usize, size: usize },
    #[error("block {block} must be bounded with a unary map swapping 0 and 1")]
    BlockUnboundedOrBadUnary { block: usize },
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("size {requested} exceeds the enumeration cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
