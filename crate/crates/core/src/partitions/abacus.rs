//! Beta-sets and the `q`-abacus.
//!
//! For core/quotient computations a partition with `ℓ` parts is encoded with
//! exactly `L = q·⌈ℓ/q⌉` beta numbers `λ_i + L − i` (`i = 1..=L`, padding with
//! zero parts). Runner `r` holds the beads congruent to `r` mod `q`; quotient
//! components are listed for `r = 0..q`.

use super::rim_hook::{beta_numbers, from_beta_numbers};
use super::Partition;

/// A finite set of distinct nonnegative integers encoding a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaSet {
    /// Largest first.
    beads: Vec<usize>,
}

impl BetaSet {
    /// Encodes `lambda` with `len ≥ ℓ(λ)` beads.
    pub fn with_len(lambda: &Partition, len: usize) -> Self {
        assert!(len >= lambda.len(), "beta-set needs at least one bead per part");
        BetaSet {
            beads: beta_numbers(lambda, len),
        }
    }

    /// Encodes `lambda` with the bead count padded to a multiple of `q`.
    pub fn for_abacus(lambda: &Partition, q: usize) -> Self {
        assert!(q >= 1);
        BetaSet::with_len(lambda, lambda.len().div_ceil(q) * q)
    }

    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn to_partition(&self) -> Partition {
        from_beta_numbers(self.beads.clone())
    }

    /// Bead positions (`b div q`) on each runner, largest first.
    pub fn runners(&self, q: usize) -> Vec<Vec<usize>> {
        let mut runners = vec![Vec::new(); q];
        for &b in &self.beads {
            runners[b % q].push(b / q);
        }
        runners
    }
}

fn runner_partition(positions: &[usize]) -> Partition {
    // positions are decreasing; the j-th bead from the top has positions[j] - (k-1-j) gaps below it
    let k = positions.len();
    let parts = positions
        .iter()
        .enumerate()
        .map(|(j, &p)| p - (k - 1 - j))
        .filter(|&v| v > 0)
        .collect();
    Partition::from_sorted_unchecked(parts)
}

impl Partition {
    /// The `q`-core: what remains after stripping `q`-rim hooks until none are left.
    pub fn core(&self, q: usize) -> Partition {
        let beta = BetaSet::for_abacus(self, q);
        let mut beads = Vec::with_capacity(beta.beads.len());
        for (r, runner) in beta.runners(q).iter().enumerate() {
            beads.extend((0..runner.len()).map(|pos| pos * q + r));
        }
        from_beta_numbers(beads)
    }

    /// The `q`-quotient, one partition per runner `r = 0..q`.
    pub fn quotient(&self, q: usize) -> Vec<Partition> {
        BetaSet::for_abacus(self, q)
            .runners(q)
            .iter()
            .map(|positions| runner_partition(positions))
            .collect()
    }

    /// Rebuilds a partition from its `q`-core and `q`-quotient (as returned by
    /// [`Partition::core`] and [`Partition::quotient`]).
    pub fn from_core_and_quotient(core: &Partition, quotient: &[Partition], q: usize) -> Partition {
        assert_eq!(quotient.len(), q, "quotient must have one component per runner");
        let longest = quotient.iter().map(Partition::len).max().unwrap_or(0);
        // Grow the padding until every runner holds enough beads for its component.
        // Adding q beads shifts every runner by one position and keeps each runner's
        // residue, so the quotient components read off are unchanged.
        let mut len = core.len().div_ceil(q) * q;
        let runners = loop {
            let runners = BetaSet::with_len(core, len).runners(q);
            if runners.iter().all(|r| r.len() >= longest) {
                break runners;
            }
            len += q;
        };
        let mut beads = Vec::new();
        for (r, runner) in runners.iter().enumerate() {
            let k = runner.len();
            for j in 0..k {
                let pos = quotient[r].part(j + 1) + (k - 1 - j);
                beads.push(pos * q + r);
            }
        }
        from_beta_numbers(beads)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn beta_set_round_trip() {
        let lambda = p(&[5, 3, 3, 1]);
        for len in 4..9 {
            assert_eq!(BetaSet::with_len(&lambda, len).to_partition(), lambda);
        }
        assert_eq!(BetaSet::for_abacus(&lambda, 3).beads(), &[10, 7, 6, 3, 1, 0]);
    }

    #[test]
    fn core_examples() {
        assert_eq!(p(&[5, 2, 1, 1, 1]).core(5), Partition::empty());
        assert_eq!(p(&[2, 1]).core(2), p(&[2, 1]));
        assert_eq!(p(&[7, 1, 1, 1]).core(1), Partition::empty());
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(p(&[2, 1]).quotient(2), vec![Partition::empty(), Partition::empty()]);
        let q = p(&[5, 2, 1, 1, 1]).quotient(5);
        assert_eq!(q.len(), 5);
        assert_eq!(q.iter().map(Partition::size).sum::<usize>(), 2);
        let lambda = p(&[4, 4, 2, 1]);
        assert_eq!(lambda.quotient(1), vec![lambda.clone()]);
    }

    #[test]
    fn reconstructs_from_core_and_quotient() {
        let lambda = p(&[6, 4, 4, 2, 1, 1]);
        for q in 1..8 {
            let rebuilt = Partition::from_core_and_quotient(&lambda.core(q), &lambda.quotient(q), q);
            assert_eq!(rebuilt, lambda, "q = {q}");
        }
    }
}
