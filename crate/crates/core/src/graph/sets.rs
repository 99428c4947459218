use std::fmt;

use crate::error::{Error, Result};

/// A set of edge indices, as a bitmask. Graphs addressed this way have at
/// most 64 edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(pub u64);

pub const MAX_SUBSET_EDGES: usize = 64;

impl EdgeSet {
    pub fn empty() -> Self {
        Self(0)
    }

    /// Edges `0..m`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_SUBSET_EDGES);
        if m == 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << m) - 1)
        }
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = 0u64;
        for i in indices {
            assert!(i < MAX_SUBSET_EDGES, "edge index {i} beyond 64");
            bits |= 1 << i;
        }
        Self(bits)
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && (self.0 >> i) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| (bits >> i) & 1 == 1)
    }

    /// Every nonempty subset of `self`.
    pub fn nonempty_subsets(&self) -> impl Iterator<Item = EdgeSet> {
        let full = self.0;
        let mut sub = full;
        let mut done = full == 0;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = sub;
            sub = (sub.wrapping_sub(1)) & full;
            if sub == 0 {
                done = true;
            }
            Some(EdgeSet(out))
        })
    }

    pub(crate) fn check_within(&self, m: usize) -> Result<()> {
        if m < 64 && self.0 >> m != 0 {
            let index = 63 - self.0.leading_zeros() as usize;
            return Err(Error::EdgeOutOfRange { index, m });
        }
        Ok(())
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn empty() -> Self {
        Self(0)
    }

    pub fn from_vertices(vs: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = 0u64;
        for v in vs {
            assert!(v < 64, "vertex {v} beyond 64");
            bits |= 1 << v;
        }
        Self(bits)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < 64);
        self.0 |= 1 << v;
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| (bits >> i) & 1 == 1)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}
