use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid path order bound k={k}: {reason}")]
    InvalidK { k: usize, reason: String },

    #[error("graph format error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {u}-{v} out of range for n={n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },

    #[error("path of order {order} cannot be split for k={k} (needs at least {min})", min = 2 * .k)]
    PathTooShort { order: usize, k: usize },

    #[error("path is not part of the cover")]
    PathNotInCover,

    #[error("stale move: {0}")]
    StaleMove(String),

    #[error("graph has {n} vertices, above the exact oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("instance metadata mismatch: {0}")]
    Metadata(String),

    #[error("invalid grid spec: {0}")]
    InvalidGrid(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k < 4 {
        return Err(Error::InvalidK { k, reason: "k must be at least 4".into() });
    }
    Ok(())
}
