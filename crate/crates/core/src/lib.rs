//! Exact character values of the symmetric groups, the classification of sign
//! conjugacy classes, and explicit witness partitions for non-sign classes.
//!
//! - [`partitions`]: partitions, hook lengths, rim hooks, cores and quotients.
//! - [`characters`]: memoized Murnaghan–Nakayama evaluation and character tables.
//! - [`signclass`]: the sign-set test, the brute-force sign test and the classifier.
//! - [`witness`]: explicit partitions `β` with `|χ^β_α| ≥ 2`.

pub mod characters;
pub mod error;
pub mod partitions;
pub mod signclass;
pub mod witness;

pub use characters::{mn_char, CharValue, MemoCache};
pub use error::{Error, Result};
pub use partitions::{parse_partition, partitions_of, Cell, Partition};
