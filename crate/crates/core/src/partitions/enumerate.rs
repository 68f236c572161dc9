use super::Partition;

/// Iterator over the partitions of `n` in decreasing lexicographic order,
/// from `(n)` down to `(1^n)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

/// Every partition of `n` exactly once, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { vec![] } else { vec![n] }),
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition::from_sorted_unchecked(cur.clone());

        let mut next = cur;
        let mut rem = 0;
        while next.last() == Some(&1) {
            next.pop();
            rem += 1;
        }
        if let Some(last) = next.last_mut() {
            *last -= 1;
            let v = *last;
            rem += 1;
            while rem >= v {
                next.push(v);
                rem -= v;
            }
            if rem > 0 {
                next.push(rem);
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_has_one_partition() {
        let all: Vec<_> = partitions_of(0).collect();
        assert_eq!(all, vec![Partition::empty()]);
    }

    #[test]
    fn four_in_order() {
        let all: Vec<Vec<usize>> = partitions_of(4).map(|p| p.into_parts()).collect();
        assert_eq!(
            all,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn strictly_decreasing_order() {
        let all: Vec<_> = partitions_of(12).collect();
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert!(all.iter().all(|p| p.size() == 12));
    }
}
