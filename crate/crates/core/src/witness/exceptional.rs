//! Witnesses for `α_2 ≤ α_3 + … + α_h` outside the closed-form tables.
//!
//! Only finitely many `α` land here. Their witnesses were found by exhaustive
//! search (see `examples/generate_exceptional_table.rs`) and are checked in;
//! anything missing from the table is searched for on demand.

use rayon::prelude::*;

use crate::characters::{mn_char, MemoCache};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Cell, Partition};
use crate::signclass::{in_sign_set, TailFamily};

use super::table_data::EXCEPTIONAL;

/// `h^β_{2,1}`, or `None` for fewer than two rows.
pub fn hook21(beta: &Partition) -> Option<usize> {
    beta.hook_length(Cell::new(2, 1)).ok()
}

/// Tails `(α_2, …, α_h)` that have no closed-form witness table.
pub fn exceptional_tails() -> Vec<TailFamily> {
    let mut tails = vec![TailFamily::OneOne, TailFamily::T3211, TailFamily::T5321];
    tails.extend((2..=4).map(|a| TailFamily::PairThenOne { a }));
    tails.extend((4..=8).map(|a| TailFamily::PairThenTwoOne { a }));
    tails.extend((5..=10).map(|a| TailFamily::PairThenThreeOne { a }));
    tails
}

/// Every `α` satisfying the witness hypotheses whose tail is exceptional,
/// ordered by tail then by `α_1`.
pub fn exceptional_alphas() -> Vec<Partition> {
    let mut out = Vec::new();
    for tail in exceptional_tails() {
        let parts = tail.expand();
        let tail_sum: usize = parts.iter().sum();
        // past the tail sum, α_1 dominates and α joins the sign set
        for a1 in parts[0] + 1..=tail_sum {
            let alpha = Partition::new(std::iter::once(a1).chain(parts.iter().copied()).collect())
                .expect("α_1 exceeds α_2");
            if in_sign_set(&alpha).is_none() && alpha.parts() != [5, 4, 3, 2, 1] {
                out.push(alpha);
            }
        }
    }
    out
}

/// The checked-in witness for `α`, if any.
pub fn lookup(alpha: &Partition) -> Option<Partition> {
    EXCEPTIONAL
        .iter()
        .find(|(a, _)| *a == alpha.parts())
        .map(|(_, b)| Partition::new(b.to_vec()).expect("table entries are partitions"))
}

/// Lexicographically least `β ⊢ |α|` (comparing part sequences) with
/// `h^β_{2,1} = α_1` and `|χ^β_α| ≥ 2`.
pub fn search(alpha: &Partition, cache: &MemoCache) -> Result<Partition> {
    let target = alpha.part(1);
    let mut candidates: Vec<Partition> = partitions_of(alpha.size())
        .filter(|b| hook21(b) == Some(target))
        .collect();
    candidates.reverse();
    candidates
        .par_iter()
        .find_first(|beta| {
            !mn_char(beta, alpha, cache)
                .expect("sizes agree")
                .is_unit_or_zero()
        })
        .cloned()
        .ok_or_else(|| Error::SearchExhausted {
            alpha: alpha.clone(),
            hook: target,
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook21_values() {
        assert_eq!(hook21(&Partition::new(vec![4, 4, 4, 3]).unwrap()), Some(6));
        assert_eq!(hook21(&Partition::row(4)), None);
    }

    #[test]
    fn exceptional_range_is_finite_and_gated() {
        let alphas = exceptional_alphas();
        assert!(!alphas.is_empty());
        for a in &alphas {
            assert!(super::super::construct::check_hypotheses(a).is_ok(), "{a}");
            assert!(a.part(2) <= a.parts()[2..].iter().sum());
        }
    }

    #[test]
    fn table_covers_the_range() {
        for a in exceptional_alphas() {
            assert!(lookup(&a).is_some(), "no table entry for {a}");
        }
    }
}
