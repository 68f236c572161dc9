use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::signclass::in_sign_set;

/// Necessary condition on `β` for `χ^β_γ ≠ 0` when `γ = (a, a−1, γ_3, …)`
/// with `(a−1, γ_3, …)` in the sign set and `γ_3 + … ≤ a`: `β` has exactly two
/// `a`-hooks and each removal leaves an `(a−1)`-hook.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma4Filter {
    pub a: usize,
}

impl Lemma4Filter {
    pub fn accepts(&self, beta: &Partition) -> bool {
        let hooks = beta.hooks_of_length(self.a);
        hooks.len() == 2
            && hooks.into_iter().all(|cell| {
                let removal = beta.remove_rim_hook(cell).expect("cell is in the diagram");
                !removal.result.hooks_of_length(self.a - 1).is_empty()
            })
    }
}

/// Builds the filter for `γ`, checking its hypotheses.
pub fn lemma4_hook_filter(gamma: &Partition) -> Result<Lemma4Filter> {
    let a = gamma.part(1);
    let fail = |why: &str| Err(Error::PreconditionViolated(format!("{gamma}: {why}")));
    if gamma.len() < 2 || a < 2 || gamma.part(2) + 1 != a {
        return fail("needs γ = (a, a−1, …) with a ≥ 2");
    }
    if in_sign_set(&gamma.suffix(2)).is_none() {
        return fail("(γ_2, γ_3, …) is not in the sign set");
    }
    if gamma.parts()[2..].iter().sum::<usize>() > a {
        return fail("γ_3 + … + γ_r exceeds a");
    }
    Ok(Lemma4Filter { a })
}
