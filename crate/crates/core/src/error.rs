use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("line {line}: slot {crossing}.{slot} used twice")]
    DuplicateSlot {
        line: usize,
        crossing: usize,
        slot: u8,
    },

    #[error("line {line}: slot index {slot} out of range 0..3")]
    SlotOutOfRange { line: usize, slot: u64 },

    #[error("line {line}: crossing index {crossing} out of range (diagram has {count} crossings)")]
    CrossingOutOfRange {
        line: usize,
        crossing: u64,
        count: usize,
    },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    TooManyCrossings { crossings: usize, cap: usize },

    #[error("class ({p}, {q}) is not primitive")]
    NonPrimitiveClass { p: i64, q: i64 },

    #[error("essential circles of different classes {0} and {1} in one resolution")]
    NonParallelCircles(String, String),

    #[error("case analysis violation at vertex {vertex:#b}, crossing {crossing}: {detail}")]
    CaseAnalysisViolation {
        vertex: u32,
        crossing: usize,
        detail: String,
    },

    #[error("engine invariant violated: {0}")]
    InvariantViolation(String),

    #[error("operation requires Z/2 coefficients")]
    WrongRing,

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },
}
