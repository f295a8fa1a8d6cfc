use thiserror::Error;

use crate::ops::Move;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty permutation")]
    EmptyInput,
    #[error("invalid token `{0}`: expected a signed decimal integer")]
    InvalidToken(String),
    #[error("zero entry `{0}`: entries must be nonzero")]
    ZeroEntry(String),
    #[error("duplicate absolute value {value} at token `{token}`")]
    DuplicateValue { token: String, value: u32 },
    #[error("absolute value of `{token}` is outside 1..={n}")]
    ValueOutOfRange { token: String, n: usize },
    #[error("pointer ({pointer},{next}) is outside 1..={max} for a permutation of length {n}", next = .pointer + 1, max = .n.saturating_sub(1))]
    PointerOutOfRange { pointer: u32, n: usize },
    #[error("a cds move needs two distinct pointers, got pointer {0} twice")]
    IdenticalPointers(u32),
    #[error("{0} is not applicable")]
    NotApplicable(Move),
    #[error("family index must be at least 1")]
    ZeroFamilyIndex,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(u32),
    #[error("vertex {0} is not oriented")]
    UnorientedVertex(u32),
    #[error("vertex {0} is not a legal move")]
    IllegalMove(u32),
    #[error("self-loop on vertex {0}")]
    SelfLoop(u32),
    #[error("graph text line {line}: {message}")]
    GraphSyntax { line: usize, message: String },
    #[error("{0}")]
    Precondition(String),
    #[error("search budget of {0} states exhausted")]
    BudgetExceeded(usize),
    #[error("theorem check failed: {0}")]
    TheoremViolation(String),
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },
    #[error("trace line {line}: {message}")]
    TraceSyntax { line: usize, message: String },
}
