use std::collections::HashMap;

use super::cache::encode_key;
use super::{CharValue, MemoCache};
use crate::error::{Error, Result};
use crate::partitions::Partition;

fn parity(k: usize) -> CharValue {
    if k.is_multiple_of(2) {
        CharValue::ONE
    } else {
        CharValue::Small(-1)
    }
}

/// `χ^λ_μ` by the Murnaghan–Nakayama rule, peeling the parts of `μ` from
/// the largest down. Intermediate values are memoized in `cache`.
pub fn mn_char(lambda: &Partition, mu: &Partition, cache: &MemoCache) -> Result<CharValue> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.clone(),
            mu: mu.clone(),
        });
    }
    Ok(eval(lambda.parts(), mu.parts(), cache))
}

/// [`mn_char`] for a cycle type given in any order.
pub fn mn_char_cycle_type(lambda: &Partition, cycle_type: &[usize], cache: &MemoCache) -> Result<CharValue> {
    mn_char(lambda, &Partition::from_unsorted(cycle_type.to_vec()), cache)
}

fn eval(lambda: &[usize], mu: &[usize], cache: &MemoCache) -> CharValue {
    let Some((&m, rest)) = mu.split_first() else {
        return CharValue::ONE;
    };
    if rest.is_empty() {
        // one m-cycle: nonzero only on hooks (a, 1^b), with value (-1)^b
        return if lambda[1..].iter().all(|&p| p == 1) {
            parity(lambda.len() - 1)
        } else {
            CharValue::ZERO
        };
    }

    let key = encode_key(lambda, mu);
    if let Some(v) = cache.get(&key) {
        return v;
    }

    let len = lambda.len();
    let beads: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut occupied = vec![false; beads.first().map_or(0, |&b| b + 1)];
    for &b in &beads {
        occupied[b] = true;
    }

    let mut total = CharValue::ZERO;
    let mut next = Vec::with_capacity(len);
    for (i, &b) in beads.iter().enumerate() {
        if b < m {
            break;
        }
        let target = b - m;
        if occupied[target] {
            continue;
        }
        let leg = beads[i + 1..].iter().take_while(|&&v| v > target).count();

        // slide bead i down to `target`; it lands after the `leg` beads it passes
        next.clear();
        next.extend_from_slice(&beads[..i]);
        next.extend_from_slice(&beads[i + 1..=i + leg]);
        next.push(target);
        next.extend_from_slice(&beads[i + leg + 1..]);
        for (k, v) in next.iter_mut().enumerate() {
            *v -= len - 1 - k;
        }
        while next.last() == Some(&0) {
            next.pop();
        }

        total = total + eval(&next, rest, cache) * parity(leg);
    }

    cache.insert(key, total.clone());
    total
}

/// Cross-check evaluator: peels the parts of `μ` from the smallest up, using
/// the cell-based hook and rim-hook routines and a private memo.
pub fn mn_char_smallest_first(lambda: &Partition, mu: &Partition) -> Result<CharValue> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.clone(),
            mu: mu.clone(),
        });
    }
    let mut memo = HashMap::new();
    Ok(eval_smallest_first(lambda, mu.parts(), &mut memo))
}

fn eval_smallest_first(
    lambda: &Partition,
    mu: &[usize],
    memo: &mut HashMap<(Partition, usize), CharValue>,
) -> CharValue {
    let Some((&m, prefix)) = mu.split_last() else {
        return CharValue::ONE;
    };
    let key = (lambda.clone(), mu.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = CharValue::ZERO;
    for cell in lambda.hooks_of_length(m) {
        let removal = lambda
            .remove_rim_hook(cell)
            .expect("cells from hooks_of_length lie in the diagram");
        total = total + eval_smallest_first(&removal.result, prefix, memo).signed(removal.sign);
    }
    memo.insert(key, total.clone());
    total
}
