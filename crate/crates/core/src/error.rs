use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("board size must be at least 1, got {0}")]
    InvalidBoardSize(usize),

    #[error("square ({row},{col}) is off a {size}x{size} board")]
    OffBoard { row: i32, col: i32, size: usize },

    #[error("<{dx},{dy}> is not a knight move")]
    InvalidDelta { dx: i32, dy: i32 },

    #[error("move order rank {0} is out of range [0, 40320)")]
    RankOutOfRange(u64),

    #[error("invalid move order: {reason} (token {token:?})")]
    ParseOrder { token: String, reason: &'static str },

    #[error("malformed tour path at index {index}: {reason}")]
    MalformedPath { index: usize, reason: &'static str },

    #[error("malformed board grid: {0}")]
    MalformedGrid(String),

    #[error("invalid square {0:?}, expected \"row,col\"")]
    ParseSquare(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
