use thiserror::Error;

/// Errors surfaced by the engine. Every failure mode is a value; no panics on
/// user input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid interval: lower endpoint {lo} exceeds upper endpoint {hi}")]
    InvalidInterval { lo: String, hi: String },

    #[error("division domain violation: divisor set contains 0")]
    DivisorContainsZero,

    #[error("root of negative number: {0}")]
    NegativeRadicand(String),

    #[error("unknown constant name `{0}` (expected e, pi or sqrt2)")]
    UnknownConstant(String),

    #[error("parse error at byte {pos}: {msg}")]
    ExprParse { pos: usize, msg: String },

    #[error("variable x{index} out of range (expression has {dims} variables)")]
    VarOutOfRange { index: usize, dims: usize },

    #[error("partial derivative with respect to x{0} has indefinite sign on the box")]
    IndefiniteSign(usize),

    #[error("first-level images overlap; gap structure undefined")]
    OverlappingImages,

    #[error("first-level images touch; thickness undefined (zero-length gap)")]
    TouchingImages,

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("refinement rule violated declared constants: {0}")]
    MoranViolation(String),

    #[error("box budget exceeded: needed {needed} boxes, budget {budget} (set CANTOR_ARITH_BUDGET to raise)")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("verdict is not Proved; no certified image available")]
    NotProved,

    #[error("verdict carries no image conclusion")]
    NoImageConclusion,

    #[error("lambda {0} outside the admissible range [1/3, 1/2)")]
    LambdaOutOfRange(String),

    #[error("scale factor must be nonzero (and its enclosure must exclude 0)")]
    ZeroScale,

    #[error("set specification error: {0}")]
    SpecFile(String),

    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
