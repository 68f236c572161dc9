use thiserror::Error;

use crate::partitions::{Cell, Partition};

/// Errors raised by the library.
///
/// `Inconsistency`, `ClaimMismatch`, `NotAWitness` and `SearchExhausted` signal
/// that an expected identity failed to hold numerically. `ClaimMismatch` does
/// fire for the closed form of witness branch I.6, whose predicted value is
/// wrong; the others have never been observed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed partition token {token:?}: {reason}")]
    Parse { token: String, reason: &'static str },

    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("cell {cell} is not in the diagram of {partition}")]
    CellOutOfDiagram { partition: Partition, cell: Cell },

    #[error("size mismatch: |{lambda}| = {} but |{mu}| = {}", .lambda.size(), .mu.size())]
    SizeMismatch { lambda: Partition, mu: Partition },

    #[error("value does not fit in a 64-bit integer: {0}")]
    Overflow(String),

    #[error("n = {n} exceeds the configured capacity {capacity}")]
    CapacityExceeded { n: usize, capacity: usize },

    #[error("sign-set test and brute force disagree on {gamma}: sign set says {in_sign_set}, brute force says {brute_force}")]
    Inconsistency {
        gamma: Partition,
        in_sign_set: bool,
        brute_force: bool,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("case {case} for {alpha}: beta {beta} has value {computed}, claimed {claimed}")]
    ClaimMismatch {
        case: String,
        alpha: Partition,
        beta: Partition,
        claimed: i64,
        computed: String,
    },

    #[error("case {case} for {alpha}: beta {beta} is not a witness ({reason})")]
    NotAWitness {
        case: String,
        alpha: Partition,
        beta: Partition,
        reason: String,
    },

    #[error("no witness with h(2,1) = {hook} found for {alpha}")]
    SearchExhausted { alpha: Partition, hook: usize },

    #[error("cache snapshot: {0}")]
    Snapshot(String),
}

pub type Result<T> = std::result::Result<T, Error>;
