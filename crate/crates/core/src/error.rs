//! Error types shared by every stage of the hide/reveal pipeline.

use std::fmt;
use std::path::PathBuf;

/// Errors produced by the individual building blocks.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed hex: {0}")]
    MalformedHex(String),

    #[error("invalid PKCS#7 padding (wrong key or corrupted cipher)")]
    InvalidPadding,

    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    #[error("charset violation: {0}")]
    CharsetViolation(String),

    #[error("image dimensions {width}x{height} are not multiples of 8")]
    NotBlockAligned { width: usize, height: usize },

    #[error("image dimensions {width}x{height} are smaller than one 8x8 block")]
    TooSmall { width: usize, height: usize },

    #[error("non-finite DCT coefficient at index {0}")]
    NonFiniteCoefficient(usize),

    #[error("insufficient capacity: {found} eligible coefficients, {needed} required")]
    InsufficientCapacity { found: usize, needed: usize },

    #[error("embedding plan does not match plane at site {0}")]
    PlanPlaneMismatch(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("file not found: {}", .0.display())]
    NotFound(PathBuf),

    #[error("bad magic: expected binary PGM (P5)")]
    BadMagic,

    #[error("unsupported maxval {0}, only 255 is accepted")]
    MaxvalNot255(u32),

    #[error("malformed PGM header: {0}")]
    BadHeader(String),

    #[error("truncated pixel data: expected {expected} bytes, found {found}")]
    TruncatedData { expected: usize, found: usize },

    #[error("key file: {0}")]
    KeyFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Caller supplied something unusable (bad hex key, d <= 0, ...).
    InvalidArgument,
    /// Cover/stego files that cannot carry or hold a payload.
    CapacityOrFormat,
    /// Recovered data does not check out: wrong keys or corruption.
    Integrity,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidArgument(_) => ErrorKind::InvalidArgument,
            Error::MalformedHex(_)
            | Error::InvalidPadding
            | Error::LengthMismatch(_)
            | Error::CharsetViolation(_)
            | Error::PlanPlaneMismatch(_)
            | Error::KeyFile(_) => ErrorKind::Integrity,
            Error::NotBlockAligned { .. }
            | Error::TooSmall { .. }
            | Error::NonFiniteCoefficient(_)
            | Error::InsufficientCapacity { .. }
            | Error::DimensionMismatch(_)
            | Error::NotFound(_)
            | Error::BadMagic
            | Error::MaxvalNot255(_)
            | Error::BadHeader(_)
            | Error::TruncatedData { .. }
            | Error::Io(_) => ErrorKind::CapacityOrFormat,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Pipeline stage names attached to errors from [`crate::pipeline`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Encrypt,
    Split,
    Scramble,
    ForwardDct,
    SelectSites,
    Embed,
    InverseDct,
    Extract,
    Unscramble,
    Merge,
    Decrypt,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::Encrypt => "encrypt",
            Stage::Split => "split",
            Stage::Scramble => "scramble",
            Stage::ForwardDct => "forward-dct",
            Stage::SelectSites => "select-sites",
            Stage::Embed => "embed",
            Stage::InverseDct => "inverse-dct",
            Stage::Extract => "extract",
            Stage::Unscramble => "unscramble",
            Stage::Merge => "merge",
            Stage::Decrypt => "decrypt",
        };
        f.write_str(name)
    }
}

/// An [`Error`] tagged with the pipeline stage that raised it.
#[derive(Debug, thiserror::Error)]
#[error("{stage} stage failed: {source}")]
pub struct PipelineError {
    pub stage: Stage,
    #[source]
    pub source: Error,
}

impl PipelineError {
    pub fn kind(&self) -> ErrorKind {
        self.source.kind()
    }
}

pub(crate) trait StageExt<T> {
    fn stage(self, stage: Stage) -> std::result::Result<T, PipelineError>;
}

impl<T> StageExt<T> for Result<T> {
    fn stage(self, stage: Stage) -> std::result::Result<T, PipelineError> {
        self.map_err(|source| PipelineError { stage, source })
    }
}
