//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong in `ratbase`.
#[derive(Debug, Error)]
pub enum Error {
    /// `p/q` is not a valid base (needs `p > q >= 1` and `gcd(p, q) = 1`).
    #[error("invalid base: {0}")]
    InvalidBase(String),

    /// A digit does not belong to `{0, ..., p-1}` or the word is not a canonical expansion.
    #[error("invalid word: {0}")]
    InvalidWord(String),

    /// A letter lies outside the sub-alphabet the operation works on.
    #[error("invalid letter {letter}: expected a letter in {lo}..={hi}")]
    InvalidLetter { letter: u32, lo: u32, hi: u32 },

    /// The seed word cannot be used for this operation (e.g. the empty word for `nmin`).
    #[error("invalid seed: {0}")]
    InvalidSeed(String),

    /// A bounded stream ran past its letter budget.
    #[error("stream exhausted after {budget} letters")]
    StreamExhausted { budget: u64 },

    /// A configured memory or size cap would be exceeded.
    #[error("resource limit exceeded: {what} needs {needed}, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    /// The request is well-formed but not supported (e.g. a binary infinite de Bruijn word).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Ensemble members were sampled on different grids.
    #[error("misaligned ensemble: {0}")]
    Alignment(String),

    /// A parameter is outside the domain of the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A snapshot file is malformed or of an unknown version.
    #[error("bad snapshot: {0}")]
    Snapshot(String),

    /// Unknown table or figure identifier.
    #[error("unknown experiment `{0}`")]
    UnknownExperiment(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit status used by the command-line front end.
    ///
    /// `2` for usage problems, `3` when a resource cap was hit, `1` for anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidBase(_)
            | Error::InvalidWord(_)
            | Error::InvalidLetter { .. }
            | Error::InvalidSeed(_)
            | Error::InvalidArgument(_)
            | Error::Parse(_)
            | Error::UnknownExperiment(_)
            | Error::Unsupported(_) => 2,
            Error::ResourceLimit { .. } => 3,
            _ => 1,
        }
    }
}
