//! Multigraphs with loops, vertex weightings, and the edge and structure
//! queries the rest of the crate is built on.

pub mod canon;
pub mod format;
mod sets;
mod tree;

pub use sets::{EdgeSet, VertexSet};
pub use tree::{Forest, Tree, TwigSequence};

use crate::error::{Error, Result};

/// Undirected multigraph on vertices `0..n`. Loops and parallel edges are
/// allowed; edges keep the order they were given in, so edge subsets can be
/// addressed by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
        }
        Ok(Self { n, edges })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    /// The path `P_n` on vertices `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self { n, edges }
    }

    /// The star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let edges = (1..=k).map(|v| (0, v)).collect();
        Self { n: k + 1, edges }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self { n, edges }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Self { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        if self.has_loop() {
            return false;
        }
        let mut seen: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Degree of each vertex; a loop adds 2.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Neighbor lists with multiplicity. A loop lists its vertex once.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            if u != v {
                adj[v].push(u);
            }
        }
        adj
    }

    /// Adds an edge, returning its index.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a == u && b == v) || (a == v && b == u))
    }

    /// Connected components of the spanning subgraph `(V, A)` where `A` is an
    /// edge subset. Each component is sorted; components are ordered by their
    /// smallest vertex.
    pub fn components(&self, subset: &EdgeSet) -> Result<Vec<Vec<usize>>> {
        subset.check_within(self.m())?;
        let mut dsu = Dsu::new(self.n);
        for i in subset.iter() {
            let (u, v) = self.edges[i];
            dsu.union(u, v);
        }
        Ok(dsu.groups())
    }

    /// Components of the whole graph.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut dsu = Dsu::new(self.n);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        dsu.groups()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// `G − S`: same vertices, edges in `s` removed.
    pub fn delete_edges(&self, s: &EdgeSet) -> Result<Graph> {
        s.check_within(self.m())?;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !s.contains(*i))
            .map(|(_, &e)| e)
            .collect();
        Ok(Graph { n: self.n, edges })
    }

    /// The subgraph induced by `keep`, relabeled so `keep[i]` becomes vertex `i`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| map[u] != usize::MAX && map[v] != usize::MAX)
            .map(|&(u, v)| (map[u], map[v]))
            .collect();
        Graph { n: keep.len(), edges }
    }

    /// `G − W` for a vertex set `W`.
    pub fn remove_vertices(&self, w: &VertexSet) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !w.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels vertex `v` as `perm[v]`. Edge order is preserved.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph { n: self.n, edges }
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph {
            n: self.n + other.n,
            edges,
        }
    }

    /// `(d_1, d_2, …)`: entry `i - 1` counts vertices of degree `i`.
    /// The length is `max(n - 1, maximum degree)`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let deg = self.degrees();
        let max_deg = deg.iter().copied().max().unwrap_or(0);
        let mut out = vec![0; self.n.saturating_sub(1).max(max_deg)];
        for d in deg {
            if d > 0 {
                out[d - 1] += 1;
            }
        }
        out
    }

    /// `(e(W), d(W))`: edges with both endpoints in `W`, and edges with
    /// exactly one endpoint in `W`.
    pub fn boundary_and_interior(&self, w: &VertexSet) -> (usize, usize) {
        let mut interior = 0;
        let mut boundary = 0;
        for &(u, v) in &self.edges {
            match (w.contains(u), w.contains(v)) {
                (true, true) => interior += 1,
                (true, false) | (false, true) => boundary += 1,
                _ => {}
            }
        }
        (interior, boundary)
    }
}

/// Nonnegative integer vertex weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexWeighting {
    weights: Vec<u64>,
}

impl VertexWeighting {
    pub fn new(g: &Graph, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != g.n() {
            return Err(Error::WeightLength {
                got: weights.len(),
                n: g.n(),
            });
        }
        Ok(Self { weights })
    }

    /// The all-ones weighting `1_V`.
    pub fn unit(n: usize) -> Self {
        Self {
            weights: vec![1; n],
        }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `w(V(G))`.
    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub(crate) fn check_for(&self, g: &Graph) -> Result<()> {
        if self.weights.len() != g.n() {
            return Err(Error::WeightLength {
                got: self.weights.len(),
                n: g.n(),
            });
        }
        Ok(())
    }
}

/// `(G/S, w_{G/S})`. Non-loop edges of `s` identify their endpoints and add
/// weights; loops in `s` are deleted. Edges outside `s` survive, including
/// new loops and parallel edges. Merged vertices are numbered by their
/// smallest original vertex, so the result does not depend on the order in
/// which `s` is contracted.
pub fn contract_edges(
    g: &Graph,
    w: &VertexWeighting,
    s: &EdgeSet,
) -> Result<(Graph, VertexWeighting)> {
    w.check_for(g)?;
    s.check_within(g.m())?;
    if s.is_empty() {
        return Err(Error::Precondition(
            "contraction set must be nonempty".into(),
        ));
    }
    let mut dsu = Dsu::new(g.n());
    for i in s.iter() {
        let (u, v) = g.edges[i];
        dsu.union(u, v);
    }
    let groups = dsu.groups();
    let mut new_id = vec![0; g.n()];
    let mut weights = Vec::with_capacity(groups.len());
    for (id, group) in groups.iter().enumerate() {
        let mut total = 0;
        for &v in group {
            new_id[v] = id;
            total += w.weights[v];
        }
        weights.push(total);
    }
    let edges = g
        .edges
        .iter()
        .enumerate()
        .filter(|(i, _)| !s.contains(*i))
        .map(|(_, &(u, v))| (new_id[u], new_id[v]))
        .collect();
    Ok((
        Graph {
            n: groups.len(),
            edges,
        },
        VertexWeighting { weights },
    ))
}

/// Union-find with union by size and path halving.
#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Sets ordered by their smallest member, members sorted.
    pub(crate) fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let r = self.find(v);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(v);
        }
        out
    }
}
