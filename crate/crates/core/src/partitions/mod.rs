//! Integer partitions and Young-diagram combinatorics.
//!
//! A [`Partition`] is stored canonically: a weakly decreasing list of positive
//! parts with the size cached alongside. Cells are addressed 1-based, `(row, col)`.
//!
//! The text form used on the command line and in JSON is
//! `part ("," part)*` with `part = int | int "^" int`, so `3,2,1^2` is
//! `(3,2,1,1)`. The empty partition is written `[]` (the empty string is also
//! accepted on input).

mod abacus;
mod enumerate;
mod rim_hook;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use abacus::BetaSet;
pub use enumerate::{partitions_of, Partitions};
pub use rim_hook::{RimHookAddition, RimHookRemoval};

/// A partition of a nonnegative integer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

/// A node `(row, col)` of a Young diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Builds a partition from parts in any order (a cycle type, say). Zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(n)`
    pub fn row(n: usize) -> Self {
        Partition::from_sorted_unchecked(if n == 0 { vec![] } else { vec![n] })
    }

    /// `(1^n)`
    pub fn column(n: usize) -> Self {
        Partition::from_sorted_unchecked(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// `|λ|`, the number being partitioned.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The 1-based `i`-th part, or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let mut out = Vec::with_capacity(cols);
        for j in 1..=cols {
            out.push(self.parts.iter().take_while(|&&p| p >= j).count());
        }
        Partition::from_sorted_unchecked(out)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// `(m, λ_1, λ_2, …)`; requires `m ≥ λ_1`.
    pub fn prepend(&self, m: usize) -> Result<Partition> {
        if m < self.first() {
            return Err(Error::NotAPartition(
                std::iter::once(m).chain(self.parts.iter().copied()).collect(),
            ));
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(m);
        parts.extend_from_slice(&self.parts);
        Partition::new(parts)
    }

    /// The partition formed by parts `start..` (1-based).
    pub fn suffix(&self, start: usize) -> Partition {
        let from = start.saturating_sub(1).min(self.len());
        Partition::from_sorted_unchecked(self.parts[from..].to_vec())
    }

    /// True if some part other than 1 repeats, or 1 occurs three or more times.
    pub fn has_forbidden_repeat(&self) -> bool {
        let ones = self.parts.iter().filter(|&&p| p == 1).count();
        ones > 2 || self.parts.windows(2).any(|w| w[0] == w[1] && w[0] > 1)
    }
}

/// Parses the partition text grammar.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let text = text.trim();
    if text.is_empty() || text == "[]" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for raw in text.split(',') {
        let token = raw.trim();
        let (value, count) = match token.split_once('^') {
            Some((v, k)) => (parse_positive(v, token)?, parse_positive(k, token)?),
            None => (parse_positive(token, token)?, 1),
        };
        parts.extend(std::iter::repeat_n(value, count));
    }
    Partition::new(parts)
}

fn parse_positive(s: &str, token: &str) -> Result<usize> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            token: token.to_string(),
            reason: "expected a positive integer",
        });
    }
    match s.parse::<usize>() {
        Ok(0) => Err(Error::Parse {
            token: token.to_string(),
            reason: "parts and exponents must be at least 1",
        }),
        Ok(v) => Ok(v),
        Err(_) => Err(Error::Parse {
            token: token.to_string(),
            reason: "integer out of range",
        }),
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Canonical rendering: runs of three or more equal parts use `^`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("[]");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == v).count();
            let reps = if run >= 3 { 1 } else { run };
            for _ in 0..reps {
                if !first {
                    f.write_str(",")?;
                }
                first = false;
                if run >= 3 {
                    write!(f, "{v}^{run}")?;
                } else {
                    write!(f, "{v}")?;
                }
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_partition(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parses_plain_and_exponent_forms() {
        assert_eq!(parse_partition("5,3,2,1").unwrap(), p(&[5, 3, 2, 1]));
        assert_eq!(parse_partition("3,2,1^2").unwrap(), p(&[3, 2, 1, 1]));
        assert_eq!(parse_partition(" 4 , 1^3 ").unwrap(), p(&[4, 1, 1, 1]));
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert_eq!(parse_partition("[]").unwrap(), Partition::empty());
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(matches!(parse_partition("2,3"), Err(Error::NotAPartition(v)) if v == vec![2, 3]));
        assert!(matches!(parse_partition("1^2,2"), Err(Error::NotAPartition(_))));
    }

    #[test]
    fn rejects_malformed_tokens() {
        for bad in ["a", "3,,1", "0", "2^0", "2^", "^2", "-1", "3;2", "2^2^2"] {
            assert!(matches!(parse_partition(bad), Err(Error::Parse { .. })), "{bad}");
        }
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(p(&[5, 1, 1, 1, 1]).to_string(), "5,1^4");
        assert_eq!(p(&[3, 2, 1, 1]).to_string(), "3,2,1,1");
        assert_eq!(p(&[4, 4, 4, 3]).to_string(), "4^3,3");
        assert_eq!(Partition::empty().to_string(), "[]");
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 3, 2, 1]).conjugate(), p(&[4, 3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::row(6).conjugate(), Partition::column(6));
    }

    #[test]
    fn forbidden_repeats() {
        assert!(!p(&[5, 3, 1, 1]).has_forbidden_repeat());
        assert!(p(&[2, 2]).has_forbidden_repeat());
        assert!(p(&[3, 1, 1, 1]).has_forbidden_repeat());
    }

    #[test]
    fn prepend_and_suffix() {
        let g = p(&[3, 2, 1]);
        assert_eq!(g.prepend(7).unwrap(), p(&[7, 3, 2, 1]));
        assert!(g.prepend(2).is_err());
        assert_eq!(p(&[9, 4, 3, 2]).suffix(2), p(&[4, 3, 2]));
        assert_eq!(g.suffix(1), g);
        assert_eq!(g.suffix(4), Partition::empty());
    }
}
