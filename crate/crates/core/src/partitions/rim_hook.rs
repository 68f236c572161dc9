use super::{Cell, Partition};
use crate::error::{Error, Result};

/// The result of stripping the rim hook attached to a cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookRemoval {
    /// Cell whose hook has the same length as the stripped rim hook.
    pub removed_from: Cell,
    pub length: usize,
    /// Rows spanned by the rim hook, minus one.
    pub leg: usize,
    pub result: Partition,
    /// `(-1)^leg`
    pub sign: i32,
}

/// A rim hook glued onto a partition. `result` is the grown partition and
/// `added_at` the cell of `result` whose hook is the new rim hook, so
/// `result.remove_rim_hook(added_at)` gives back the original.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookAddition {
    pub added_at: Cell,
    pub length: usize,
    pub leg: usize,
    pub result: Partition,
    pub sign: i32,
}

fn parity_sign(leg: usize) -> i32 {
    if leg.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Beta numbers `λ_i + L - i` for `i = 1..=L`, largest first.
pub(crate) fn beta_numbers(lambda: &Partition, len: usize) -> Vec<usize> {
    debug_assert!(len >= lambda.len());
    (1..=len).map(|i| lambda.part(i) + len - i).collect()
}

/// Inverse of [`beta_numbers`]; `beads` must be distinct (any order).
pub(crate) fn from_beta_numbers(mut beads: Vec<usize>) -> Partition {
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let len = beads.len();
    let parts: Vec<usize> = beads
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Partition::from_sorted_unchecked(parts)
}

impl Partition {
    /// `h_{i,j} = λ_i − j + λ'_j − i + 1`.
    pub fn hook_length(&self, c: Cell) -> Result<usize> {
        if !self.contains_cell(c) {
            return Err(Error::CellOutOfDiagram {
                partition: self.clone(),
                cell: c,
            });
        }
        let arm = self.part(c.row) - c.col;
        let leg = self.parts().iter().skip(c.row).take_while(|&&p| p >= c.col).count();
        Ok(arm + leg + 1)
    }

    /// All hook lengths in row-major order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| self.part(c.row) - c.col + conj.part(c.col) - c.row + 1)
            .collect()
    }

    /// Cells with hook length `q`, in row-major order.
    pub fn hooks_of_length(&self, q: usize) -> Vec<Cell> {
        let conj = self.conjugate();
        self.cells()
            .filter(|c| self.part(c.row) - c.col + conj.part(c.col) - c.row + 1 == q)
            .collect()
    }

    /// Strips the rim hook whose length equals the hook length at `c`.
    pub fn remove_rim_hook(&self, c: Cell) -> Result<RimHookRemoval> {
        let length = self.hook_length(c)?;
        let len = self.len();
        let leg = self.parts().iter().skip(c.row).take_while(|&&p| p >= c.col).count();
        let mut beads = beta_numbers(self, len);
        // row i carries bead index i-1; its bead slides down by the hook length
        beads[c.row - 1] -= length;
        Ok(RimHookRemoval {
            removed_from: c,
            length,
            leg,
            result: from_beta_numbers(beads),
            sign: parity_sign(leg),
        })
    }

    /// Every partition obtained by adding one rim hook of length `q`,
    /// in decreasing lexicographic order of the result.
    pub fn add_rim_hooks(&self, q: usize) -> Vec<RimHookAddition> {
        if q == 0 {
            return Vec::new();
        }
        let len = self.len() + q;
        let beads = beta_numbers(self, len);
        let occupied = |v: usize| beads.contains(&v);
        let mut out = Vec::new();
        for &b in &beads {
            let target = b + q;
            if occupied(target) {
                continue;
            }
            let leg = beads.iter().filter(|&&v| v > b && v < target).count();
            let moved: Vec<usize> = beads.iter().map(|&v| if v == b { target } else { v }).collect();
            let result = from_beta_numbers(moved);
            // rank of the moved bead from the top gives its row
            let row = beads.iter().filter(|&&v| v > target).count() + 1;
            let col = result.part(row) + 1 + leg - q;
            out.push(RimHookAddition {
                added_at: Cell::new(row, col),
                length: q,
                leg,
                result,
                sign: parity_sign(leg),
            });
        }
        out.sort_by(|a, b| b.result.cmp(&a.result));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(Partition::row(7).hook_length(Cell::new(1, 1)).unwrap(), 7);
        assert_eq!(p(&[5, 3, 2, 1]).hook_length(Cell::new(1, 1)).unwrap(), 8);
        assert!(matches!(
            p(&[2, 1]).hook_length(Cell::new(2, 2)),
            Err(Error::CellOutOfDiagram { .. })
        ));
        assert!(p(&[2, 1]).hook_length(Cell::new(0, 1)).is_err());
    }

    #[test]
    fn hooks_of_length_examples() {
        assert_eq!(p(&[5, 2, 1, 1, 1]).hooks_of_length(5).len(), 2);
        assert_eq!(Partition::row(6).hooks_of_length(6), vec![Cell::new(1, 1)]);
        // hooks of (3,3): 4,3,2 / 3,2,1
        assert!(p(&[3, 3]).hooks_of_length(5).is_empty());
    }

    #[test]
    fn removal_examples() {
        let r = Partition::row(4).remove_rim_hook(Cell::new(1, 1)).unwrap();
        assert_eq!((r.result, r.leg, r.sign), (Partition::empty(), 0, 1));

        let r = p(&[2, 2]).remove_rim_hook(Cell::new(1, 1)).unwrap();
        assert_eq!(r.length, 3);
        assert_eq!((r.result, r.leg, r.sign), (p(&[1]), 1, -1));

        let beta = p(&[5, 2, 1, 1, 1]);
        let mut results: Vec<_> = beta
            .hooks_of_length(5)
            .into_iter()
            .map(|c| beta.remove_rim_hook(c).unwrap().result)
            .collect();
        results.sort();
        assert_eq!(results, vec![Partition::column(5), Partition::row(5)]);
    }

    #[test]
    fn addition_examples() {
        let shapes: Vec<_> = Partition::empty().add_rim_hooks(3).into_iter().map(|a| a.result).collect();
        assert_eq!(shapes, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);

        // (3) has a part equal to q, so the count is not q: brute force over
        // partitions of 6 finds (6), (3,3), (3,2,1), (3,1,1,1)
        let shapes: Vec<_> = p(&[3]).add_rim_hooks(3).into_iter().map(|a| a.result).collect();
        assert_eq!(shapes, vec![p(&[6]), p(&[3, 3]), p(&[3, 2, 1]), p(&[3, 1, 1, 1])]);

        // the a shapes obtained from (2) by adding an a-hook, a = 5
        let a = 5;
        let mut expected = vec![p(&[a + 2]), p(&[2, 2, 1, 1, 1]), p(&[2, 1, 1, 1, 1, 1])];
        for i in 1..=a - 3 {
            let mut parts = vec![a - i, 3];
            parts.extend(std::iter::repeat_n(1, i - 1));
            expected.push(Partition::from_unsorted(parts));
        }
        expected.sort_by(|x, y| y.cmp(x));
        let got: Vec<_> = p(&[2]).add_rim_hooks(a).into_iter().map(|x| x.result).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn addition_cell_reverses() {
        let lambda = p(&[4, 2, 2, 1]);
        for q in 1..8 {
            for add in lambda.add_rim_hooks(q) {
                assert_eq!(add.result.hook_length(add.added_at).unwrap(), q);
                let back = add.result.remove_rim_hook(add.added_at).unwrap();
                assert_eq!(back.result, lambda);
                assert_eq!(back.leg, add.leg);
            }
        }
    }
}
