use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Partitions index the power-sum basis. Their `Ord` is the canonical key
/// order used for serialization: degree ascending, then parts compared
/// lexicographically in reverse, so that `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
    degree: u64,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted_unchecked(parts))
    }

    /// Builds a partition from positive parts in any order, dropping zeros.
    pub(crate) fn from_weights(parts: impl IntoIterator<Item = u64>) -> Self {
        let mut parts: Vec<u32> = parts
            .into_iter()
            .filter(|&p| p > 0)
            .map(|p| u32::try_from(p).expect("part exceeds u32"))
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted_unchecked(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let degree = parts.iter().map(|&p| u64::from(p)).sum();
        Self { parts, degree }
    }

    /// Builds a partition from a multiplicity vector: `counts[k]` copies of part `k`.
    /// Entry 0 is ignored.
    pub(crate) fn from_counts<C: Copy + Into<u64>>(counts: &[C]) -> Self {
        let mut parts = Vec::new();
        for (k, &c) in counts.iter().enumerate().skip(1).rev() {
            let c: u64 = c.into();
            for _ in 0..c {
                parts.push(k as u32);
            }
        }
        Self::from_sorted_unchecked(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Number of parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition::from_sorted_unchecked(parts)
    }

    /// Removes one part equal to `k`, if present.
    pub fn remove_part(&self, k: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == k)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition::from_sorted_unchecked(parts))
    }

    /// `z_λ = ∏_i i^{m_i} m_i!`, the squared norm of `p_λ`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut idx = 0;
        while idx < self.parts.len() {
            let part = self.parts[idx];
            let mut m = 0u32;
            while idx < self.parts.len() && self.parts[idx] == part {
                m += 1;
                idx += 1;
                z *= part;
                z *= m;
            }
        }
        z
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// All partitions of `n`, in canonical key order (reverse lexicographic).
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition::from_sorted_unchecked(cur.clone());
        self.current = next_partition(cur);
        Some(out)
    }
}

pub fn partitions(n: u32) -> Partitions {
    let current = if n == 0 { Some(Vec::new()) } else { Some(vec![n]) };
    Partitions { current }
}

// Successor in reverse lexicographic order: find the rightmost part > 1,
// decrement it, and redistribute the remainder greedily.
fn next_partition(mut parts: Vec<u32>) -> Option<Vec<u32>> {
    let mut ones = 0u32;
    while let Some(&1) = parts.last() {
        parts.pop();
        ones += 1;
    }
    let last = parts.pop()?;
    let k = last - 1;
    let mut rem = ones + 1;
    parts.push(k);
    while rem > 0 {
        let take = rem.min(k);
        parts.push(take);
        rem -= take;
    }
    Some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts_match_known_sequence() {
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions(n as u32).count(), e, "p({n})");
        }
    }

    #[test]
    fn partitions_come_out_in_key_order() {
        let all: Vec<_> = partitions(7).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0].parts(), &[7]);
        assert_eq!(all.last().unwrap().parts(), &[1; 7]);
    }

    #[test]
    fn new_sorts_and_rejects_zero() {
        let p = Partition::new(vec![1, 3, 2]).unwrap();
        assert_eq!(p.parts(), &[3, 2, 1]);
        assert_eq!(p.degree(), 6);
        assert_eq!(p.len(), 3);
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn z_values() {
        let z = |v: Vec<u32>| Partition::new(v).unwrap().z();
        assert_eq!(z(vec![2, 1]), BigInt::from(2));
        assert_eq!(z(vec![1, 1, 1]), BigInt::from(6));
        assert_eq!(z(vec![2, 2]), BigInt::from(8));
        assert_eq!(z(vec![]), BigInt::from(1));
    }

    #[test]
    fn union_and_remove() {
        let a = Partition::new(vec![3, 1]).unwrap();
        let b = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(a.union(&b).parts(), &[3, 2, 1, 1]);
        assert_eq!(a.remove_part(3).unwrap().parts(), &[1]);
        assert!(a.remove_part(2).is_none());
    }
}
