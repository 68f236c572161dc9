use rayon::prelude::*;
use serde::Serialize;

use super::{in_sign_set, SignDecomposition};
use crate::characters::{mn_char, CharValue, MemoCache};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::witness;

/// An irreducible character whose value on the class lies outside `{0, ±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violator {
    pub lambda: Partition,
    pub value: CharValue,
    pub source: ViolatorSource,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ViolatorSource {
    BruteForce,
    Witness,
}

/// The first `λ` (decreasing lexicographic order) with `χ^λ_γ ∉ {0, ±1}`, if any.
pub fn sign_violator(gamma: &Partition, cache: &MemoCache) -> Result<Option<Violator>> {
    cache.check_capacity(gamma.size())?;
    let lambdas: Vec<Partition> = partitions_of(gamma.size()).collect();
    let found = lambdas.par_iter().find_map_first(|lambda| {
        let value = mn_char(lambda, gamma, cache).expect("sizes agree");
        (!value.is_unit_or_zero()).then(|| Violator {
            lambda: lambda.clone(),
            value,
            source: ViolatorSource::BruteForce,
        })
    });
    Ok(found)
}

/// True iff every irreducible character of `S_|γ|` takes a value in `{0, ±1}` on `γ`.
pub fn is_sign_partition_bruteforce(gamma: &Partition, cache: &MemoCache) -> Result<bool> {
    Ok(sign_violator(gamma, cache)?.is_none())
}

/// Outcome of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub gamma: Partition,
    pub is_sign: bool,
    pub decomposition: Option<SignDecomposition>,
    pub violator: Option<Violator>,
    /// Whether the brute-force test was run and agreed.
    pub verified: bool,
}

#[derive(Serialize)]
struct ClassificationJson<'a> {
    gamma: &'a Partition,
    is_sign: bool,
    s: Option<usize>,
    tail: Option<String>,
    violator: Option<&'a Partition>,
    verified: bool,
}

impl Classification {
    /// `{"gamma", "is_sign", "s", "tail", "violator", "verified"}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ClassificationJson {
            gamma: &self.gamma,
            is_sign: self.is_sign,
            s: self.decomposition.map(|d| d.s),
            tail: self.decomposition.map(|d| d.tail.tag()),
            violator: self.violator.as_ref().map(|v| &v.lambda),
            verified: self.verified,
        })
        .expect("classification serializes")
    }
}

/// Decides sign-ness from the sign set. With `verify`, also runs the brute-force
/// test and fails with `Inconsistency` if the two disagree.
///
/// Negative answers carry a violating character when one is available: a
/// constructed witness when the constructions apply, otherwise the first
/// brute-force hit (searched only within capacity).
pub fn classify(gamma: &Partition, verify: bool, cache: &MemoCache) -> Result<Classification> {
    let decomposition = in_sign_set(gamma);
    let is_sign = decomposition.is_some();
    let certificate = if is_sign {
        None
    } else {
        witness::non_sign_certificate(gamma, cache)?
    };

    let violator = if verify {
        let brute = sign_violator(gamma, cache)?;
        if brute.is_none() != is_sign {
            return Err(Error::Inconsistency {
                gamma: gamma.clone(),
                in_sign_set: is_sign,
                brute_force: brute.is_none(),
            });
        }
        certificate.or(brute)
    } else {
        match certificate {
            Some(v) => Some(v),
            None if !is_sign && gamma.size() <= cache.capacity_n() => sign_violator(gamma, cache)?,
            None => None,
        }
    };

    Ok(Classification {
        gamma: gamma.clone(),
        is_sign,
        decomposition,
        violator,
        verified: verify,
    })
}

/// Checks that `γ` and `(m, γ_1, …, γ_r)` are both sign partitions or both not,
/// by brute force. Requires `m > |γ|`.
pub fn check_lemma2(gamma: &Partition, m: usize, cache: &MemoCache) -> Result<bool> {
    if m <= gamma.size() {
        return Err(Error::PreconditionViolated(format!(
            "m = {m} must exceed |{gamma}| = {}",
            gamma.size()
        )));
    }
    cache.check_capacity(m + gamma.size())?;
    let extended = gamma.prepend(m)?;
    Ok(is_sign_partition_bruteforce(gamma, cache)? == is_sign_partition_bruteforce(&extended, cache)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn brute_force_examples() {
        let cache = MemoCache::new();
        assert!(is_sign_partition_bruteforce(&Partition::row(7), &cache).unwrap());
        assert!(is_sign_partition_bruteforce(&p(&[4, 3, 2, 1]), &cache).unwrap());
        let v = sign_violator(&p(&[5, 4, 3, 2, 1]), &cache).unwrap().unwrap();
        // first in decreasing lexicographic order
        assert_eq!(v.lambda, p(&[8, 1, 1, 1, 1, 1, 1, 1]));
        assert!(!v.value.is_unit_or_zero());
    }

    #[test]
    fn capacity_gate() {
        let cache = MemoCache::new().with_capacity_n(10);
        assert!(matches!(
            is_sign_partition_bruteforce(&p(&[6, 5]), &cache),
            Err(Error::CapacityExceeded { n: 11, capacity: 10 })
        ));
        assert!(classify(&p(&[6, 5]), true, &cache).is_err());
        // without verification the sign set alone decides
        let c = classify(&p(&[55, 50, 9]), false, &cache).unwrap();
        assert!(!c.is_sign && !c.verified);
    }

    #[test]
    fn classify_examples() {
        let cache = MemoCache::new();
        let c = classify(&p(&[10, 4, 3, 1]), true, &cache).unwrap();
        assert!(c.is_sign && c.verified);
        assert_eq!(c.decomposition.unwrap().s, 1);

        let c = classify(&p(&[2, 2]), false, &cache).unwrap();
        assert!(!c.is_sign);
        let v = c.violator.unwrap();
        assert!(!v.value.is_unit_or_zero());

        let c = classify(&p(&[1, 1]), true, &cache).unwrap();
        assert!(c.is_sign);
    }

    #[test]
    fn classify_json_schema() {
        let cache = MemoCache::new();
        let j = classify(&p(&[7, 3, 2, 1]), true, &cache).unwrap().to_json();
        assert_eq!(j["gamma"], "7,3,2,1");
        assert_eq!(j["is_sign"], true);
        assert_eq!(j["s"], 1);
        assert_eq!(j["tail"], "A_A1_1(3)");
        assert!(j["violator"].is_null());
        assert_eq!(j["verified"], true);
        assert_eq!(j.as_object().unwrap().len(), 6);

        let j = classify(&p(&[5, 4, 3, 2, 1]), true, &cache).unwrap().to_json();
        assert_eq!(j["violator"], "4^3,3");
        assert!(j["s"].is_null() && j["tail"].is_null());
    }

    #[test]
    fn prepending_examples() {
        let cache = MemoCache::new();
        assert!(check_lemma2(&p(&[2, 1]), 4, &cache).unwrap());
        assert!(check_lemma2(&p(&[2, 2]), 5, &cache).unwrap());
        assert!(check_lemma2(&Partition::empty(), 1, &cache).unwrap());
        assert!(matches!(
            check_lemma2(&p(&[2, 1]), 3, &cache),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
