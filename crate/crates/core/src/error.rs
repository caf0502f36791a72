use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("half length {0} is out of range (expected 1..=32)")]
    HalfLengthOutOfRange(u32),

    #[error("a {len}-symbol word does not fit in a {bits}-bit integer")]
    WidthTooSmall { len: u32, bits: u32 },

    #[error("{value:#x} is not a Dyck word of half length {n}")]
    NotDyck { value: u64, n: u32 },

    #[error("symbol sequence is not a Dyck word: {0}")]
    InvalidSymbols(String),

    #[error("the two symbols must differ")]
    IdenticalSymbols,

    #[error("position {position} is outside 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("the maximum Dyck word has no decomposition")]
    NoDecomposition,

    #[error("catalan({0}) does not fit in 64 bits")]
    CatalanOverflow(u32),

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("brute force refuses half length {n} (limit {limit})")]
    OracleTooLarge { n: u32, limit: u32 },

    #[error("rendering refuses half length {n} (limit {limit})")]
    RenderTooLarge { n: u32, limit: u32 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
