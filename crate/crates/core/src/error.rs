use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("duplicate doc_id {0}")]
    DuplicateDocId(String),

    #[error("empty doc_id")]
    EmptyDocId,

    #[error("unknown term {0:?}")]
    UnknownTerm(String),

    /// A weight was requested for a zero count; only non-zero counts have weights.
    #[error("count must be at least 1")]
    ZeroCount,

    #[error("invalid N: document frequency {df} exceeds N = {n}")]
    InvalidN { df: u64, n: u64 },

    #[error("invalid log base {0}: must be finite and > 1")]
    InvalidBase(f64),

    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("not a pennant index file (bad magic)")]
    BadMagic,

    #[error("unsupported index version {found} (this build reads version {supported})")]
    UnsupportedVersion { found: u8, supported: u8 },

    #[error("corrupt index data: {0}")]
    Corrupt(&'static str),

    #[error("too many documents for 32-bit ordinals")]
    TooManyDocuments,
}
