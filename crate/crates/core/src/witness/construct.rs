//! Closed-form witness shapes, keyed on the shape of `α`.
//!
//! Nothing here evaluates characters; [`super::witness_beta`] checks every
//! shape produced against the Murnaghan–Nakayama value.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::signclass::{in_sign_set, TailFamily};

/// Which construction produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseId {
    /// `α_2 ≤ α_3 + … + α_h`, closed-form row `row` (1-based) of the table for `tail`.
    TailTable { tail: TailFamily, row: u8 },
    /// `α_2 ≤ α_3 + … + α_h` in the finite range without a closed form.
    TailSearch,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    /// `α_1 − α_2 ≤ α_h`; sub-branch 1 to 7 in the order listed in [`construct`].
    ///
    /// Sub-branch 6 (`α_1 − α_2 = 1`, `h ≥ 5`, `α_{h−1} = 2`) predicts
    /// `χ^{(|α|−α_1−2, α_1−2, 2, 2)}_α = −2`, but the value is 0 or −1 on every
    /// instance checked, starting with `α = (8,7,3,2,1)`. It is kept as
    /// printed so that [`super::witness_beta`] reports the mismatch.
    I(u8),
}

impl CaseId {
    /// The case letter used in JSON output.
    pub fn letter(&self) -> &'static str {
        match self {
            CaseId::TailTable { .. } | CaseId::TailSearch => "A",
            CaseId::B => "B",
            CaseId::C => "C",
            CaseId::D => "D",
            CaseId::E => "E",
            CaseId::F => "F",
            CaseId::G => "G",
            CaseId::H => "H",
            CaseId::I(_) => "I",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseId::TailTable { tail, row } => write!(f, "A[{tail} row {row}]"),
            CaseId::TailSearch => f.write_str("A[search]"),
            CaseId::I(b) => write!(f, "I.{b}"),
            other => f.write_str(other.letter()),
        }
    }
}

/// Derived quantities for `α` in the `α_2 > α_3 + … + α_h` branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessContext {
    pub alpha: Partition,
    /// Number of parts.
    pub h: usize,
    /// Least `k` with `α_k + … + α_h < α_1 − α_2`; `h + 1` when only the empty sum qualifies.
    pub k: usize,
    /// `α_k + … + α_h`
    pub x: usize,
}

impl WitnessContext {
    pub fn new(alpha: &Partition) -> Self {
        let h = alpha.len();
        let gap = alpha.part(1).saturating_sub(alpha.part(2));
        let k = (1..=h + 1).find(|&k| suffix_sum(alpha, k) < gap).expect("the empty sum is 0");
        WitnessContext {
            alpha: alpha.clone(),
            h,
            k,
            x: suffix_sum(alpha, k),
        }
    }
}

/// `α_i + … + α_h`
pub(crate) fn suffix_sum(alpha: &Partition, i: usize) -> usize {
    alpha.parts().iter().skip(i.saturating_sub(1)).sum()
}

/// Output of [`construct`]: `beta` is `None` when the witness must be found by search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub case: CaseId,
    pub beta: Option<Partition>,
    pub claimed: Option<i64>,
}

fn pm2(exponent: i64) -> i64 {
    if exponent.rem_euclid(2) == 0 {
        2
    } else {
        -2
    }
}

/// Builds a partition from `(value, multiplicity)` runs, rejecting negative
/// multiplicities and increasing runs.
fn shape(alpha: &Partition, case: CaseId, runs: &[(i64, i64)]) -> Result<Partition> {
    let invalid = || Error::NotAWitness {
        case: case.to_string(),
        alpha: alpha.clone(),
        beta: Partition::empty(),
        reason: format!("runs {runs:?} do not form a partition"),
    };
    let mut parts = Vec::new();
    for &(value, count) in runs {
        if count < 0 || (count > 0 && value < 1) {
            return Err(invalid());
        }
        parts.extend(std::iter::repeat_n(value as usize, count as usize));
    }
    Partition::new(parts).map_err(|_| invalid())
}

/// Checks the hypotheses under which a witness `β` with `h^β_{2,1} = α_1` is
/// guaranteed: at least three parts, `α_1 > α_2`, `α` outside the sign set,
/// `(α_2, …, α_h)` inside it, and `α ≠ (5,4,3,2,1)`.
pub fn check_hypotheses(alpha: &Partition) -> Result<()> {
    let fail = |why: &str| Err(Error::PreconditionViolated(format!("{alpha}: {why}")));
    if alpha.len() < 3 {
        return fail("needs at least three parts");
    }
    if alpha.part(1) <= alpha.part(2) {
        return fail("needs α_1 > α_2");
    }
    if in_sign_set(alpha).is_some() {
        return fail("α is in the sign set");
    }
    if in_sign_set(&alpha.suffix(2)).is_none() {
        return fail("(α_2, …, α_h) is not in the sign set");
    }
    if alpha.parts() == [5, 4, 3, 2, 1] {
        return fail("(5,4,3,2,1) has no such witness");
    }
    Ok(())
}

/// Picks the case for `α` and builds its witness shape. Assumes
/// [`check_hypotheses`] passed.
pub fn construct(alpha: &Partition) -> Result<Construction> {
    let a = |i: usize| alpha.part(i) as i64;
    let n = alpha.size() as i64;
    let a1 = a(1);
    let a2 = a(2);

    if alpha.part(2) <= suffix_sum(alpha, 3) {
        return construct_tail_case(alpha);
    }

    let ctx = WitnessContext::new(alpha);
    let h = ctx.h;
    let k = ctx.k;
    let x = ctx.x as i64;
    let d = a1 - a2;
    let mk = |case: CaseId, runs: &[(i64, i64)], claim: i64| -> Result<Construction> {
        Ok(Construction {
            case,
            beta: Some(shape(alpha, case, runs)?),
            claimed: Some(claim),
        })
    };

    if k == h + 1 {
        let ah = a(h);
        let ah1 = a(h - 1);
        return if d < ah {
            mk(CaseId::I(1), &[(n - a1, 1), (1, a1)], pm2(a1 - 1))
        } else if h == 3 {
            mk(CaseId::I(2), &[(a1, 2)], 2)
        } else if ah >= 2 {
            mk(CaseId::I(3), &[(n - a1, 1), (a2 + 2, 1), (1, a1 - a2 - 2)], pm2(a1 - a2))
        } else if ah1 == 1 {
            mk(CaseId::I(4), &[(n - a1, 1), (a1, 1)], 2)
        } else if h == 4 {
            let a3 = a(3);
            mk(
                CaseId::I(5),
                &[(a1 - 2, 1), (a3, 2), (4, 1), (1, a1 - a3 - 2)],
                pm2(a1 - a3),
            )
        } else if ah1 == 2 {
            mk(CaseId::I(6), &[(n - a1 - 2, 1), (a1 - 2, 1), (2, 2)], -2)
        } else {
            mk(
                CaseId::I(7),
                &[(n - a1 - ah1 + 1, 1), (3, 2), (2, ah1 - 3), (1, a1 - ah1 - 1)],
                pm2(a1 + ah1 - 1),
            )
        };
    }

    // α_1 − α_2 is a part of α
    if let Some(i) = (1..=h).find(|&i| a(i) == d) {
        return if alpha.part(i) >= suffix_sum(alpha, i + 1) {
            mk(CaseId::G, &[(n - a1, 1), (a2 + 1, 1), (1, a1 - a2 - 1)], pm2(a1 - a2 - 1))
        } else {
            mk(CaseId::H, &[(n - a1, 1), (a2 + 2, 1), (1, a1 - a2 - 2)], pm2(a1 - a2))
        };
    }

    let tail = alpha.suffix(k - 1);
    let tail_sum = tail.size() as i64;
    let family = TailFamily::recognize(tail.parts());
    let longer = TailFamily::recognize(alpha.suffix(k - 2).parts());
    let longer_exceptional = matches!(longer, Some(TailFamily::T3211 | TailFamily::T5321));

    if a1 == a2 + tail_sum {
        let c = match family {
            Some(TailFamily::T3211) => Some(3),
            Some(TailFamily::T5321) => Some(6),
            _ => None,
        };
        if let Some(c) = c {
            return mk(CaseId::D, &[(n - a1, 1), (a1 - c, 1), (1, c)], pm2(c));
        }
    }

    let e_applies = match family {
        Some(TailFamily::PairThenOne { .. }) => a1 == a2 + tail_sum - 1 && !longer_exceptional,
        Some(TailFamily::PairThenTwoOne { .. }) => a1 == a2 + tail_sum - 3,
        Some(TailFamily::PairThenThreeOne { .. }) => a1 == a2 + tail_sum - 4,
        _ => false,
    };
    if e_applies {
        return mk(CaseId::E, &[(n - a1, 1), (1, a1)], pm2(a1 - 1));
    }

    if a1 == a2 + tail_sum - 1 && longer_exceptional {
        return mk(CaseId::F, &[(n - a1, 1), (a1, 1)], 2);
    }

    // F needs α_1 − α_2 = α_{k−2}, which G and H have already taken; it never fires.
    let case = if a(k - 1) > x { CaseId::B } else { CaseId::C };
    mk(case, &[(n - a1, 1), (x + 1, 1), (1, a1 - x - 1)], pm2(a1 - x - 1))
}

/// `α_2 ≤ α_3 + … + α_h`: the tail is one of the seven shapes, and large
/// tails have closed-form witnesses. Table-derived witnesses carry no claim.
fn construct_tail_case(alpha: &Partition) -> Result<Construction> {
    let t = alpha.part(1) as i64;
    let family = TailFamily::recognize(&alpha.parts()[1..]);
    let table = |row: u8, runs: &[(i64, i64)]| -> Result<Construction> {
        let case = CaseId::TailTable {
            tail: family.expect("table rows exist only for recognized tails"),
            row,
        };
        Ok(Construction {
            case,
            beta: Some(shape(alpha, case, runs)?),
            claimed: None,
        })
    };
    let search = Ok(Construction {
        case: CaseId::TailSearch,
        beta: None,
        claimed: None,
    });

    match family {
        Some(TailFamily::PairThenOne { a }) if a >= 5 => {
            let a = a as i64;
            if (a + 2..=2 * a - 2).contains(&t) || t == 2 * a {
                table(1, &[(2 * a, 1), (2, 1), (1, t - 2)])
            } else if t == a + 1 {
                table(2, &[(a - 1, 3), (4, 1)])
            } else if t == 2 * a - 1 {
                table(3, &[(2 * a, 1), (t, 1)])
            } else {
                search
            }
        }
        Some(TailFamily::PairThenTwoOne { a }) if a >= 9 => {
            let a = a as i64;
            if (a + 4..=2 * a - 2).contains(&t) || (2 * a..=2 * a + 2).contains(&t) {
                table(1, &[(2 * a + 2, 1), (4, 1), (1, t - 4)])
            } else if t == a + 1 {
                table(2, &[(2 * a + 2, 1), (t - 1, 1), (1, 1)])
            } else if (a + 2..=a + 3).contains(&t) {
                table(3, &[(2 * a + 2, 1), (2, 1), (1, t - 2)])
            } else if t == 2 * a - 1 {
                table(4, &[(2 * a + 2, 1), (t, 1)])
            } else {
                search
            }
        }
        Some(TailFamily::PairThenThreeOne { a }) if a >= 11 => {
            let a = a as i64;
            if (a + 5..=2 * a - 2).contains(&t) || (2 * a..=2 * a + 3).contains(&t) {
                table(1, &[(2 * a + 3, 1), (5, 1), (1, t - 5)])
            } else if t == a + 1 || t == a + 4 {
                table(2, &[(2 * a + 3, 1), (2, 1), (1, t - 2)])
            } else if t == a + 2 {
                table(3, &[(2 * a + 3, 1), (t - 2, 1), (1, 2)])
            } else if t == a + 3 || t == 2 * a - 1 {
                table(4, &[(2 * a + 3, 1), (t, 1)])
            } else {
                search
            }
        }
        _ => search,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn context_k_and_x() {
        let ctx = WitnessContext::new(&p(&[13, 8, 4, 2, 1]));
        assert_eq!((ctx.h, ctx.k, ctx.x), (5, 4, 3));
        let ctx = WitnessContext::new(&p(&[4, 3, 2]));
        assert_eq!((ctx.k, ctx.x), (4, 0));
    }

    #[test]
    fn hypotheses_gate() {
        assert!(check_hypotheses(&p(&[6, 5, 4, 2])).is_err());
        assert!(check_hypotheses(&p(&[5, 4, 3, 2, 1])).is_err());
        assert!(check_hypotheses(&p(&[4, 3])).is_err());
        assert!(check_hypotheses(&p(&[4, 4, 1])).is_err());
        assert!(check_hypotheses(&p(&[4, 3, 2, 1])).is_err());
        assert!(check_hypotheses(&p(&[4, 3, 2])).is_ok());
    }

    #[test]
    fn dispatch_examples() {
        let c = construct(&p(&[4, 3, 2])).unwrap();
        assert_eq!(c.case, CaseId::I(1));
        assert_eq!(c.beta.unwrap(), p(&[5, 1, 1, 1, 1]));
        assert_eq!(c.claimed, Some(-2));

        let c = construct(&p(&[13, 8, 4, 2, 1])).unwrap();
        assert_eq!(c.case, CaseId::B);
        assert_eq!(c.beta.unwrap(), p(&[15, 4, 1, 1, 1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(c.claimed, Some(-2));

        assert_eq!(construct(&p(&[9, 7, 4, 2, 1])).unwrap().case, CaseId::TailSearch);

        assert_eq!(construct(&p(&[7, 5, 3, 2, 1])).unwrap().case, CaseId::TailSearch);
    }

    #[test]
    fn tail_tables_hit_every_row() {
        let c = construct(&p(&[6, 5, 4, 1])).unwrap();
        assert_eq!(c.case, CaseId::TailTable { tail: TailFamily::PairThenOne { a: 5 }, row: 2 });
        assert_eq!(c.beta.unwrap(), p(&[4, 4, 4, 4]));
        let c = construct(&p(&[9, 5, 4, 1])).unwrap();
        assert_eq!(c.beta.unwrap(), p(&[10, 9]));
        let c = construct(&p(&[16, 11, 10, 3, 1])).unwrap();
        assert_eq!(c.case, CaseId::TailTable { tail: TailFamily::PairThenThreeOne { a: 11 }, row: 1 });
        assert!(c.claimed.is_none());
    }

    #[test]
    fn case_letters() {
        assert_eq!(CaseId::I(3).letter(), "I");
        assert_eq!(CaseId::TailSearch.letter(), "A");
        assert_eq!(CaseId::I(3).to_string(), "I.3");
    }
}
