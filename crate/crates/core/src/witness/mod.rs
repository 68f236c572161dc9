//! Explicit characters certifying that a partition is not a sign partition.
//!
//! For `α = (α_1, …, α_h)` with `h ≥ 3`, `α_1 > α_2`, `α` outside the sign
//! set but `(α_2, …, α_h)` inside it, [`witness_beta`] returns `β ⊢ |α|` with
//! `h^β_{2,1} = α_1` and `|χ^β_α| ≥ 2`. [`lift_witness`] then carries such a
//! witness from a suffix of `γ` to all of `γ`.

mod construct;
mod exceptional;
mod lemma4;
mod lift;
mod table_data;

use serde::Serialize;

use crate::characters::{mn_char, CharValue, MemoCache};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::signclass::{in_sign_set, Violator, ViolatorSource};

pub use construct::{check_hypotheses, construct, CaseId, Construction, WitnessContext};
pub use exceptional::{exceptional_alphas, exceptional_tails, hook21, search as search_witness};
pub use lemma4::{lemma4_hook_filter, Lemma4Filter};
pub use lift::{lift_witness, special_54321_witness};

/// A verified witness for `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCase {
    pub alpha: Partition,
    pub case: CaseId,
    pub beta: Partition,
    /// The value the construction predicts, when it predicts one.
    pub claimed: Option<i64>,
    pub computed: CharValue,
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    alpha: &'a Partition,
    case: &'static str,
    beta: &'a Partition,
    claimed: Option<i64>,
    computed: &'a CharValue,
    hook21: usize,
}

impl WitnessCase {
    pub fn hook21(&self) -> usize {
        hook21(&self.beta).expect("witnesses have at least two rows")
    }

    /// `{"alpha", "case", "beta", "claimed", "computed", "hook21"}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(WitnessJson {
            alpha: &self.alpha,
            case: self.case.letter(),
            beta: &self.beta,
            claimed: self.claimed,
            computed: &self.computed,
            hook21: self.hook21(),
        })
        .expect("witnesses serialize")
    }
}

/// Finds and verifies a witness for `α`.
///
/// Fails with `PreconditionViolated` outside the hypotheses, `ClaimMismatch`
/// if a predicted value is wrong and `NotAWitness` if the shape is wrong or
/// the value lies in `{0, ±1}`.
pub fn witness_beta(alpha: &Partition, cache: &MemoCache) -> Result<WitnessCase> {
    check_hypotheses(alpha)?;
    let Construction { case, beta, claimed } = construct(alpha)?;
    let beta = match beta {
        Some(b) => b,
        None => match exceptional::lookup(alpha) {
            Some(b) => b,
            None => exceptional::search(alpha, cache)?,
        },
    };

    let reject = |beta: &Partition, reason: String| Error::NotAWitness {
        case: case.to_string(),
        alpha: alpha.clone(),
        beta: beta.clone(),
        reason,
    };
    if beta.size() != alpha.size() {
        return Err(reject(&beta, format!("size {} instead of {}", beta.size(), alpha.size())));
    }
    if hook21(&beta) != Some(alpha.part(1)) {
        return Err(reject(&beta, format!("h_(2,1) is {:?}, not {}", hook21(&beta), alpha.part(1))));
    }
    let computed = mn_char(&beta, alpha, cache)?;
    if let Some(c) = claimed {
        if computed != c {
            return Err(Error::ClaimMismatch {
                case: case.to_string(),
                alpha: alpha.clone(),
                beta,
                claimed: c,
                computed: computed.to_string(),
            });
        }
    }
    if computed.is_unit_or_zero() {
        return Err(reject(&beta, format!("value {computed} is not a witness")));
    }
    Ok(WitnessCase {
        alpha: alpha.clone(),
        case,
        beta,
        claimed,
        computed,
    })
}

/// A violating character for `γ` built from the witness constructions, when
/// they apply.
///
/// Takes the longest suffix of `γ` outside the sign set. A `(5,4,3,2,1)`
/// suffix uses the dedicated witnesses; otherwise, if the suffix meets the
/// witness hypotheses and the earlier parts clear its `h_(2,1)`, the witness
/// is lifted. Returns `None` when neither route applies (for instance when
/// the suffix starts with a repeated part) and for members of the sign set.
///
/// The `α_{h−1} = 2` branch of case I predicts a witness that does not hold
/// up (see [`CaseId::I`]); there the suffix is searched instead, within the
/// cache capacity.
pub fn non_sign_certificate(gamma: &Partition, cache: &MemoCache) -> Result<Option<Violator>> {
    if in_sign_set(gamma).is_some() {
        return Ok(None);
    }
    // the one-part suffix is always in the sign set, and γ itself is not
    let start = (1..gamma.len())
        .rev()
        .find(|&j| in_sign_set(&gamma.suffix(j)).is_none())
        .expect("γ is outside the sign set");
    let alpha = gamma.suffix(start);

    let delta = if alpha.parts() == [5, 4, 3, 2, 1] {
        match special_54321_witness(gamma, start, cache) {
            Ok(d) => d,
            Err(Error::PreconditionViolated(_)) => return Ok(None),
            Err(e) => return Err(e),
        }
    } else {
        if check_hypotheses(&alpha).is_err() {
            return Ok(None);
        }
        let beta = match witness_beta(&alpha, cache) {
            Ok(w) => w.beta,
            // a closed form that fails its check is replaced by a search when affordable
            Err(Error::ClaimMismatch { .. } | Error::NotAWitness { .. })
                if alpha.size() <= cache.capacity_n() =>
            {
                exceptional::search(&alpha, cache)?
            }
            Err(Error::ClaimMismatch { .. } | Error::NotAWitness { .. }) => return Ok(None),
            Err(e) => return Err(e),
        };
        match lift_witness(gamma, start, &beta, cache) {
            Ok(d) => d,
            Err(Error::PreconditionViolated(_)) => return Ok(None),
            Err(e) => return Err(e),
        }
    };
    let value = mn_char(&delta, gamma, cache)?;
    Ok(Some(Violator {
        lambda: delta,
        value,
        source: ViolatorSource::Witness,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn witness_for_432() {
        let w = witness_beta(&p(&[4, 3, 2]), &MemoCache::new()).unwrap();
        assert_eq!(w.beta, p(&[5, 1, 1, 1, 1]));
        assert_eq!(w.computed, -2);
        let j = w.to_json();
        assert_eq!(j["alpha"], "4,3,2");
        assert_eq!(j["case"], "I");
        assert_eq!(j["beta"], "5,1^4");
        assert_eq!(j["claimed"], -2);
        assert_eq!(j["computed"], -2);
        assert_eq!(j["hook21"], 4);
        assert_eq!(j.as_object().unwrap().len(), 6);
    }

    #[test]
    fn preconditions_surface() {
        let cache = MemoCache::new();
        for bad in [&[5, 4, 3, 2, 1][..], &[4, 3, 2, 1], &[3, 3, 1]] {
            assert!(matches!(witness_beta(&p(bad), &cache), Err(Error::PreconditionViolated(_))));
        }
    }

    #[test]
    fn certificates() {
        let cache = MemoCache::new();
        let v = non_sign_certificate(&p(&[9, 4, 3, 2]), &cache).unwrap().unwrap();
        assert_eq!(v.lambda, p(&[14, 1, 1, 1, 1]));
        assert_eq!(v.value, -2);
        let v = non_sign_certificate(&p(&[8, 5, 4, 3, 2, 1]), &cache).unwrap().unwrap();
        assert_eq!(v.lambda, p(&[12, 4, 4, 3]));
        assert!(non_sign_certificate(&p(&[4, 3, 2, 1]), &cache).unwrap().is_none());
        assert!(non_sign_certificate(&p(&[2, 2]), &cache).unwrap().is_none());
    }
}
