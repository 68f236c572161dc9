use crate::characters::{mn_char, MemoCache};
use crate::error::{Error, Result};
use crate::partitions::Partition;

use super::exceptional::hook21;

fn prefix_parts(gamma: &Partition, start: usize) -> Result<&[usize]> {
    if start == 0 || start > gamma.len() {
        return Err(Error::PreconditionViolated(format!(
            "suffix start {start} out of range for {gamma}"
        )));
    }
    Ok(&gamma.parts()[..start - 1])
}

/// Extends a witness for the suffix `(γ_start, …, γ_r)` to one for `γ` by adding
/// every earlier part to the first row of `β`. `start` is 1-based.
///
/// Requires `|β| = γ_start + … + γ_r` and, when `β` has two or more rows,
/// every earlier part strictly larger than `h^β_{2,1}`. The result satisfies
/// `χ^δ_γ = χ^β_{(γ_start, …)}`, which is checked before returning.
pub fn lift_witness(gamma: &Partition, start: usize, beta: &Partition, cache: &MemoCache) -> Result<Partition> {
    let prefix = prefix_parts(gamma, start)?;
    let suffix = gamma.suffix(start);
    if beta.size() != suffix.size() {
        return Err(Error::PreconditionViolated(format!(
            "|{beta}| differs from |{suffix}|"
        )));
    }
    if let Some(h) = hook21(beta) {
        if prefix.iter().any(|&p| p <= h) {
            return Err(Error::PreconditionViolated(format!(
                "prefix of {gamma} before part {start} must exceed h_(2,1) = {h} of {beta}"
            )));
        }
    }

    let mut parts = beta.parts().to_vec();
    let extra: usize = prefix.iter().sum();
    match parts.first_mut() {
        Some(first) => *first += extra,
        None => parts.push(extra),
    }
    let delta = Partition::new(parts)?;

    let base = mn_char(beta, &suffix, cache)?;
    let lifted = mn_char(&delta, gamma, cache)?;
    if base != lifted {
        return Err(Error::ClaimMismatch {
            case: "lift".into(),
            alpha: gamma.clone(),
            beta: delta,
            claimed: base.to_i64().unwrap_or(i64::MAX),
            computed: lifted.to_string(),
        });
    }
    Ok(delta)
}

/// Witness for `γ` whose last five parts are `(5,4,3,2,1)` starting at `start`.
///
/// With no earlier part, or `γ_{start−1} ≥ 7`, lifts `(4,4,4,3)` (value −2).
/// With `γ_{start−1} = 6`, lifts `(15,2,1^4)` for `(6,5,4,3,2,1)` (value 2),
/// which needs every part before the 6 to exceed 6.
pub fn special_54321_witness(gamma: &Partition, start: usize, cache: &MemoCache) -> Result<Partition> {
    if gamma.suffix(start).parts() != [5, 4, 3, 2, 1] || start + 4 != gamma.len() {
        return Err(Error::PreconditionViolated(format!(
            "{gamma} does not end in (5,4,3,2,1) at part {start}"
        )));
    }
    let prefix = prefix_parts(gamma, start)?;
    let (base_start, beta, expected) = match prefix.last() {
        None => (start, vec![4, 4, 4, 3], -2),
        Some(&p) if p >= 7 => (start, vec![4, 4, 4, 3], -2),
        Some(6) => (start - 1, vec![15, 2, 1, 1, 1, 1], 2),
        Some(_) => {
            return Err(Error::PreconditionViolated(format!(
                "{gamma}: the part before (5,4,3,2,1) must be 6 or at least 7"
            )))
        }
    };
    let beta = Partition::new(beta)?;
    let delta = lift_witness(gamma, base_start, &beta, cache)?;
    let value = mn_char(&delta, gamma, cache)?;
    if value != expected {
        return Err(Error::ClaimMismatch {
            case: "(5,4,3,2,1)".into(),
            alpha: gamma.clone(),
            beta: delta,
            claimed: expected,
            computed: value.to_string(),
        });
    }
    Ok(delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn lift_example() {
        let cache = MemoCache::new();
        let gamma = p(&[9, 4, 3, 2]);
        let delta = lift_witness(&gamma, 2, &p(&[5, 1, 1, 1, 1]), &cache).unwrap();
        assert_eq!(delta, p(&[14, 1, 1, 1, 1]));
        assert_eq!(mn_char(&delta, &gamma, &cache).unwrap(), -2);
    }

    #[test]
    fn lift_from_start_is_identity() {
        let cache = MemoCache::new();
        let beta = p(&[5, 1, 1, 1, 1]);
        assert_eq!(lift_witness(&p(&[4, 3, 2]), 1, &beta, &cache).unwrap(), beta);
    }

    #[test]
    fn lift_rejects_small_prefix() {
        let cache = MemoCache::new();
        let err = lift_witness(&p(&[4, 4, 3, 2]), 2, &p(&[5, 1, 1, 1, 1]), &cache).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(_)));
        assert!(lift_witness(&p(&[9, 4, 3, 2]), 2, &p(&[5, 1]), &cache).is_err());
        assert!(lift_witness(&p(&[9, 4, 3, 2]), 5, &p(&[5, 1]), &cache).is_err());
    }

    #[test]
    fn special_witnesses() {
        let cache = MemoCache::new();
        assert_eq!(special_54321_witness(&p(&[5, 4, 3, 2, 1]), 1, &cache).unwrap(), p(&[4, 4, 4, 3]));
        assert_eq!(
            special_54321_witness(&p(&[8, 5, 4, 3, 2, 1]), 2, &cache).unwrap(),
            p(&[12, 4, 4, 3])
        );
        assert_eq!(
            special_54321_witness(&p(&[20, 5, 4, 3, 2, 1]), 2, &cache).unwrap(),
            p(&[24, 4, 4, 3])
        );
        assert_eq!(
            special_54321_witness(&p(&[6, 5, 4, 3, 2, 1]), 2, &cache).unwrap(),
            p(&[15, 2, 1, 1, 1, 1])
        );
        assert_eq!(
            special_54321_witness(&p(&[30, 6, 5, 4, 3, 2, 1]), 3, &cache).unwrap(),
            p(&[45, 2, 1, 1, 1, 1])
        );
        assert!(special_54321_witness(&p(&[5, 5, 4, 3, 2, 1]), 2, &cache).is_err());
        assert!(special_54321_witness(&p(&[6, 6, 5, 4, 3, 2, 1]), 3, &cache).is_err());
    }
}
