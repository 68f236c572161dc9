//! Sign conjugacy classes of `S_n`.
//!
//! A class (cycle type) `γ` is a *sign* class when every irreducible character
//! takes a value in `{0, ±1}` on it. [`in_sign_set`] decides this from the
//! shape of `γ` alone; [`is_sign_partition_bruteforce`] evaluates the whole
//! column of the character table, and [`classify`] can run both and insist
//! they agree.

mod classify;
mod sign_set;

pub use classify::{
    check_lemma2, classify, is_sign_partition_bruteforce, sign_violator, Classification, Violator,
    ViolatorSource,
};
pub use sign_set::{dominating_prefix_len, enumerate_sign_partitions, in_sign_set, SignDecomposition, TailFamily};
