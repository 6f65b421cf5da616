use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence must contain at least one term")]
    Empty,

    #[error("cannot parse sequence term {token:?} at position {position}")]
    Parse { position: usize, token: String },

    #[error("term {value} at index {index} is outside 0..={index}")]
    NotInA { index: usize, value: u32 },

    #[error("sequences have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("no repeated sequence within {max_steps} steps")]
    BudgetExceeded { max_steps: usize },

    #[error("generation {generation} exceeds the enumeration cap {cap}")]
    CapExceeded { generation: usize, cap: usize },

    #[error("not a {m}-increase sequence: {reason}")]
    NotIncreaseBounded { m: u32, reason: String },

    #[error("cannot parse ballot word: {0}")]
    BallotSyntax(String),

    #[error("malformed ballot word: {0}")]
    MalformedBallot(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
