use std::collections::VecDeque;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// A connected, loop-free graph with `n - 1` edges (hence simple and acyclic).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree(Graph);

impl Tree {
    pub fn new(g: Graph) -> Result<Self> {
        if g.n() == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        if g.has_loop() {
            return Err(Error::NotATree("has a loop".into()));
        }
        if g.m() != g.n() - 1 {
            return Err(Error::NotATree(format!(
                "{} vertices but {} edges",
                g.n(),
                g.m()
            )));
        }
        if !g.is_connected() {
            return Err(Error::NotATree("disconnected".into()));
        }
        Ok(Self(g))
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn as_forest(&self) -> Forest {
        Forest(self.0.clone())
    }

    /// Every vertex set inducing a subtree, each exactly once.
    pub fn enumerate_subtrees(&self) -> Result<Vec<VertexSet>> {
        self.as_forest().enumerate_subtrees()
    }

    /// The smallest subtree containing every vertex of degree at least 3,
    /// sorted. Empty for paths.
    pub fn trunk(&self) -> Vec<usize> {
        let g = &self.0;
        let mut deg = g.degrees();
        let branch: Vec<bool> = deg.iter().map(|&d| d >= 3).collect();
        if !branch.iter().any(|&b| b) {
            return Vec::new();
        }
        let adj = g.adjacency();
        let mut alive = vec![true; g.n()];
        let mut queue: VecDeque<usize> = (0..g.n()).filter(|&v| deg[v] == 1).collect();
        // Peel leaves until every remaining leaf is a branch vertex.
        while let Some(v) = queue.pop_front() {
            if branch[v] || !alive[v] {
                continue;
            }
            alive[v] = false;
            for &u in &adj[v] {
                if alive[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        queue.push_back(u);
                    }
                }
            }
        }
        (0..g.n()).filter(|&v| alive[v]).collect()
    }

    pub fn twig_sequence(&self) -> TwigSequence {
        self.as_forest().twig_sequence()
    }
}

impl TryFrom<Graph> for Tree {
    type Error = Error;

    fn try_from(g: Graph) -> Result<Self> {
        Tree::new(g)
    }
}

/// A loop-free acyclic simple graph (possibly empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Forest(Graph);

impl Forest {
    pub fn new(g: Graph) -> Result<Self> {
        if g.has_loop() {
            return Err(Error::NotAForest("has a loop".into()));
        }
        let comps = g.connected_components().len();
        if g.m() + comps != g.n() {
            return Err(Error::NotAForest("contains a cycle".into()));
        }
        Ok(Self(g))
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// Component trees, each with the sorted list of original vertices.
    pub fn components(&self) -> Vec<(Tree, Vec<usize>)> {
        self.0
            .connected_components()
            .into_iter()
            .map(|vs| {
                let t = Tree(self.0.induced_subgraph(&vs));
                (t, vs)
            })
            .collect()
    }

    /// Every nonempty vertex set `W` for which `F[W]` is connected, each
    /// exactly once. Requires at most 64 vertices.
    ///
    /// Each component is rooted at its smallest vertex; a subtree is
    /// generated from its vertex nearest the root, by choosing for each child
    /// either nothing or one subtree topped at that child.
    pub fn enumerate_subtrees(&self) -> Result<Vec<VertexSet>> {
        let n = self.n();
        if n > 64 {
            return Err(Error::Capacity {
                what: "vertices for subtree enumeration",
                got: n,
                limit: 64,
            });
        }
        let adj = self.0.adjacency();
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut children = vec![Vec::new(); n];
        for root in 0..n {
            if visited[root] {
                continue;
            }
            visited[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &u in &adj[v] {
                    if !visited[u] {
                        visited[u] = true;
                        children[v].push(u);
                        queue.push_back(u);
                    }
                }
            }
        }
        let mut topped: Vec<Vec<u64>> = vec![Vec::new(); n];
        for &v in order.iter().rev() {
            let mut sets = vec![1u64 << v];
            for &c in &children[v] {
                let below = &topped[c];
                let mut next = Vec::with_capacity(sets.len() * (below.len() + 1));
                for &s in &sets {
                    next.push(s);
                    next.extend(below.iter().map(|&b| s | b));
                }
                sets = next;
            }
            topped[v] = sets;
        }
        Ok(topped.into_iter().flatten().map(VertexSet).collect())
    }

    /// Twig counts by length. A twig starts at a leaf and follows degree-2
    /// vertices up to the first vertex whose degree is not 2. A bare path
    /// component is one twig, counted once.
    pub fn twig_sequence(&self) -> TwigSequence {
        let g = &self.0;
        let deg = g.degrees();
        let adj = g.adjacency();
        let mut counts = vec![0; g.n().saturating_sub(1)];
        for leaf in (0..g.n()).filter(|&v| deg[v] == 1) {
            let mut prev = leaf;
            let mut cur = adj[leaf][0];
            let mut len = 1;
            while deg[cur] == 2 {
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
                len += 1;
            }
            if deg[cur] == 1 && cur < leaf {
                continue;
            }
            counts[len - 1] += 1;
        }
        TwigSequence { counts }
    }

    /// `(s_1, …, s_{n-1})`: `s_i` counts vertex pairs at distance `i`.
    pub fn path_sequence(&self) -> Vec<usize> {
        let g = &self.0;
        let n = g.n();
        let adj = g.adjacency();
        let mut twice = vec![0usize; n];
        let mut dist = vec![usize::MAX; n];
        for src in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[src] = 0;
            let mut queue = VecDeque::from([src]);
            while let Some(v) = queue.pop_front() {
                for &u in &adj[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        twice[dist[u]] += 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        twice.iter().skip(1).map(|c| c / 2).collect()
    }
}

impl TryFrom<Graph> for Forest {
    type Error = Error;

    fn try_from(g: Graph) -> Result<Self> {
        Forest::new(g)
    }
}

impl From<Tree> for Forest {
    fn from(t: Tree) -> Self {
        Forest(t.0)
    }
}

/// `counts[i]` is the number of twigs of length `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwigSequence {
    pub counts: Vec<usize>,
}

impl TwigSequence {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Twig lengths in decreasing order.
    pub fn lengths(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &c) in self.counts.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(i + 1, c));
        }
        out
    }
}
