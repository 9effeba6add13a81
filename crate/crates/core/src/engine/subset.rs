//! `r`-subsets of `{0, .., n-1}` in colexicographic order.

use std::cmp::Ordering;

/// Exponents `a` of the roots `w^a` in one summand, strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetIndex(Vec<usize>);

impl SubsetIndex {
    /// Checks the indices are strictly increasing and below `n`.
    pub fn new(indices: Vec<usize>, n: usize) -> Option<Self> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        let bounded = indices.last().is_none_or(|&a| a < n);
        (increasing && bounded).then_some(SubsetIndex(indices))
    }

    /// The colex-first subset `{0, .., r-1}`.
    pub fn first(r: usize) -> Self {
        SubsetIndex((0..r).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn complement(&self, n: usize) -> SubsetIndex {
        let mut inside = vec![false; n];
        for &a in &self.0 {
            inside[a] = true;
        }
        SubsetIndex((0..n).filter(|&a| !inside[a]).collect())
    }

    /// Advances to the colex successor; returns `false` past the last subset.
    pub fn advance(&mut self, n: usize) -> bool {
        let r = self.0.len();
        for j in 0..r {
            let limit = if j + 1 < r { self.0[j + 1] } else { n };
            if self.0[j] + 1 < limit {
                self.0[j] += 1;
                for (k, slot) in self.0[..j].iter_mut().enumerate() {
                    *slot = k;
                }
                return true;
            }
        }
        false
    }

    pub fn colex_rank(&self) -> u128 {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &a)| binomial(a as u64, j as u64 + 1))
            .sum()
    }

    pub fn colex_unrank(mut rank: u128, r: usize, n: usize) -> Self {
        let mut out = vec![0; r];
        let mut hi = n;
        for j in (0..r).rev() {
            let mut a = j;
            while a + 1 < hi && binomial(a as u64 + 1, j as u64 + 1) <= rank {
                a += 1;
            }
            rank -= binomial(a as u64, j as u64 + 1);
            out[j] = a;
            hi = a;
        }
        SubsetIndex(out)
    }

    /// `{a + shift mod n}`, sorted.
    pub fn rotate(&self, shift: usize, n: usize) -> SubsetIndex {
        let mut v: Vec<usize> = self.0.iter().map(|&a| (a + shift) % n).collect();
        v.sort_unstable();
        SubsetIndex(v)
    }

    pub fn colex_cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }

    /// Number of distinct rotations, or `None` unless `self` is the
    /// colex-least member of its rotation orbit.
    pub fn orbit_weight(&self, n: usize) -> Option<usize> {
        for shift in 1..n {
            let rot = self.rotate(shift, n);
            match rot.colex_cmp(self) {
                Ordering::Less => return None,
                Ordering::Equal => return Some(shift),
                Ordering::Greater => {}
            }
        }
        Some(n)
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Iterates `count` consecutive subsets starting at colex rank `start`.
pub fn colex_block(
    start: u128,
    count: u128,
    r: usize,
    n: usize,
) -> impl Iterator<Item = SubsetIndex> {
    let mut current = Some(SubsetIndex::colex_unrank(start, r, n));
    let mut left = count;
    std::iter::from_fn(move || {
        if left == 0 {
            return None;
        }
        left -= 1;
        let out = current.take()?;
        let mut next = out.clone();
        if next.advance(n) {
            current = Some(next);
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(r: usize, n: usize) -> Vec<SubsetIndex> {
        colex_block(0, binomial(n as u64, r as u64), r, n).collect()
    }

    #[test]
    fn enumerates_every_subset_once() {
        for n in 0..=9 {
            for r in 0..=n {
                let v = all(r, n);
                assert_eq!(v.len() as u128, binomial(n as u64, r as u64));
                for (k, s) in v.iter().enumerate() {
                    assert_eq!(s.colex_rank(), k as u128);
                    assert_eq!(SubsetIndex::colex_unrank(k as u128, r, n), *s);
                    assert!(SubsetIndex::new(s.as_slice().to_vec(), n).is_some());
                }
                for w in v.windows(2) {
                    assert_eq!(w[0].colex_cmp(&w[1]), Ordering::Less);
                }
            }
        }
    }

    #[test]
    fn colex_order_of_pairs() {
        let v: Vec<Vec<usize>> = all(2, 4).into_iter().map(|s| s.0).collect();
        assert_eq!(
            v,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn orbits_of_pairs_in_four() {
        let reps: Vec<(Vec<usize>, usize)> = all(2, 4)
            .into_iter()
            .filter_map(|s| s.orbit_weight(4).map(|w| (s.0, w)))
            .collect();
        assert_eq!(reps, vec![(vec![0, 1], 4), (vec![0, 2], 2)]);
    }

    #[test]
    fn orbit_weights_partition_the_subsets() {
        for n in 1..=10 {
            for r in 0..=n {
                let total: usize = all(r, n).iter().filter_map(|s| s.orbit_weight(n)).sum();
                assert_eq!(total as u128, binomial(n as u64, r as u64));
            }
        }
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(SubsetIndex::new(vec![1, 1], 4).is_none());
        assert!(SubsetIndex::new(vec![2, 1], 4).is_none());
        assert!(SubsetIndex::new(vec![0, 4], 4).is_none());
        assert_eq!(
            SubsetIndex::new(vec![1, 3], 5)
                .unwrap()
                .complement(5)
                .as_slice(),
            &[0, 2, 4]
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(16, 4), 1820);
        assert_eq!(binomial(20, 5), 15504);
        assert_eq!(binomial(3, 5), 0);
    }
}
