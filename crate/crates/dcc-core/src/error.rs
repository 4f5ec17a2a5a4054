use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Text-format problem, reported with the 1-based line number.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Invalid parameter value (rejected before any work happens).
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// Structurally broken clique cover (unsorted clique, id out of range, ...).
    #[error("malformed cover: {0}")]
    MalformedCover(String),

    /// Cover fails validation against its graph.
    #[error("invalid cover: {0}")]
    InvalidCover(String),

    /// Two inputs that must agree (e.g. vertex counts) do not.
    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("vertex {v} out of range (n = {n})")]
    VertexOutOfRange { v: u32, n: usize },

    /// Vertex is a valid id but appears in no clique of the cover.
    #[error("vertex {v} is not in the cover universe")]
    NotInUniverse { v: u32 },

    #[error("graph is disconnected: no path between {u} and {v}")]
    Disconnected { u: u32, v: u32 },

    #[error("cover has no cliques")]
    EmptyCover,

    /// Binary container problems: bad magic, bad version, truncation.
    #[error("encoded cover: {0}")]
    BadContainer(String),

    /// Byte-level decoding problems inside a clique's payload range.
    #[error("decode error: {0}")]
    Decode(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
