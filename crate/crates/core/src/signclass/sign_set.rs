use std::fmt;

use serde::{Serialize, Serializer};

use crate::partitions::{partitions_of, Partition};

/// The shapes allowed after the strictly dominating prefix of a member of the sign set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TailFamily {
    /// `()`
    Empty,
    /// `(1,1)`
    OneOne,
    /// `(3,2,1,1)`
    T3211,
    /// `(5,3,2,1)`
    T5321,
    /// `(a, a-1, 1)`, `a ≥ 2`
    PairThenOne { a: usize },
    /// `(a, a-1, 2, 1)`, `a ≥ 4`
    PairThenTwoOne { a: usize },
    /// `(a, a-1, 3, 1)`, `a ≥ 5`
    PairThenThreeOne { a: usize },
}

impl TailFamily {
    /// The parts this family stands for.
    pub fn expand(&self) -> Vec<usize> {
        match *self {
            TailFamily::Empty => vec![],
            TailFamily::OneOne => vec![1, 1],
            TailFamily::T3211 => vec![3, 2, 1, 1],
            TailFamily::T5321 => vec![5, 3, 2, 1],
            TailFamily::PairThenOne { a } => vec![a, a - 1, 1],
            TailFamily::PairThenTwoOne { a } => vec![a, a - 1, 2, 1],
            TailFamily::PairThenThreeOne { a } => vec![a, a - 1, 3, 1],
        }
    }

    /// Matches `parts` against the seven shapes, in the order they are listed.
    pub fn recognize(parts: &[usize]) -> Option<TailFamily> {
        match *parts {
            [] => Some(TailFamily::Empty),
            [1, 1] => Some(TailFamily::OneOne),
            [3, 2, 1, 1] => Some(TailFamily::T3211),
            [5, 3, 2, 1] => Some(TailFamily::T5321),
            [a, b, 1] if a >= 2 && b + 1 == a => Some(TailFamily::PairThenOne { a }),
            [a, b, 2, 1] if a >= 4 && b + 1 == a => Some(TailFamily::PairThenTwoOne { a }),
            [a, b, 3, 1] if a >= 5 && b + 1 == a => Some(TailFamily::PairThenThreeOne { a }),
            _ => None,
        }
    }

    /// Stable tag used in JSON output, e.g. `T5321` or `A_A1_1(3)`.
    pub fn tag(&self) -> String {
        match *self {
            TailFamily::Empty => "Empty".into(),
            TailFamily::OneOne => "OneOne".into(),
            TailFamily::T3211 => "T3211".into(),
            TailFamily::T5321 => "T5321".into(),
            TailFamily::PairThenOne { a } => format!("A_A1_1({a})"),
            TailFamily::PairThenTwoOne { a } => format!("A_A1_21({a})"),
            TailFamily::PairThenThreeOne { a } => format!("A_A1_31({a})"),
        }
    }
}

impl fmt::Display for TailFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl Serialize for TailFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.tag())
    }
}

/// Certificate of membership: parts `1..=s` each exceed the sum of all later
/// parts, and parts `s+1..` spell out `tail`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignDecomposition {
    pub s: usize,
    pub tail: TailFamily,
}

/// Largest `s` such that `γ_i > γ_{i+1} + … + γ_r` for every `i ≤ s`.
pub fn dominating_prefix_len(parts: &[usize]) -> usize {
    let mut rest: usize = parts.iter().sum();
    let mut s = 0;
    for &p in parts {
        rest -= p;
        if p > rest {
            s += 1;
        } else {
            break;
        }
    }
    s
}

/// Membership in the sign set, with its decomposition.
///
/// The dominating-prefix condition is downward closed and no nonempty tail
/// shape has a first part exceeding the sum of the others, so the only
/// candidate split is the longest dominating prefix.
pub fn in_sign_set(gamma: &Partition) -> Option<SignDecomposition> {
    let parts = gamma.parts();
    let s = dominating_prefix_len(parts);
    TailFamily::recognize(&parts[s..]).map(|tail| SignDecomposition { s, tail })
}

/// Members of the sign set among the partitions of `n`, decreasing lexicographic order.
pub fn enumerate_sign_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n).filter(|g| in_sign_set(g).is_some()).collect()
}
