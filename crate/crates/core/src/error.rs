use thiserror::Error;

use crate::refute::BucketCount;

/// Crate-wide error type.
///
/// Variants carry enough data for callers to act on the failure: capacity
/// errors name the offending quantity, refutation misses carry the full
/// bucket histogram, and budget exhaustion reports the bounds established
/// before the search gave up.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("capacity exceeded: {quantity} = {value} exceeds limit {limit}")]
    Capacity {
        quantity: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("vertex {index} out of range (graph has {vertex_count} vertices)")]
    Index { index: u64, vertex_count: u64 },

    #[error("labels do not match graph: {0}")]
    Label(String),

    #[error("witness unavailable: {0}")]
    WitnessUnavailable(String),

    #[error("invalid colouring: {0}")]
    Colouring(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("colouring uses {used} colours; refutation requires at most {limit}")]
    TooManyColours { used: u32, limit: u32 },

    #[error(
        "no witness found: {} buckets over {blocks} blocks, largest holds {largest}",
        .histogram.len()
    )]
    NoWitnessFound {
        histogram: Vec<BucketCount>,
        largest: u32,
        blocks: u32,
    },

    #[error("model rejected: {0}")]
    Model(String),

    #[error("{path}:{line}: {message}")]
    Format {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("result unknown: {reason} (bounds {lower}..={upper})")]
    Unknown {
        reason: String,
        lower: u64,
        upper: u64,
    },

    #[error("solver failure: {0}")]
    Solver(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(path: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}
