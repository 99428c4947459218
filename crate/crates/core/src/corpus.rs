//! Seeded random corpora for the identity checks. `ChaCha8Rng` keeps the
//! streams reproducible across platforms and crate versions.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{EdgeSet, Forest, Graph, VertexWeighting};

/// A multigraph on `1..=max_n` vertices with up to `max_edges` edges whose
/// endpoints are drawn uniformly (loops and parallel edges allowed), plus
/// weights in `0..=max_weight`.
pub fn random_weighted_multigraph<R: Rng>(
    rng: &mut R,
    max_n: usize,
    max_edges: usize,
    max_weight: u64,
) -> (Graph, VertexWeighting) {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=max_edges);
    let edges = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    let g = Graph::new(n, edges).expect("endpoints in range");
    let weights = (0..n).map(|_| rng.gen_range(0..=max_weight)).collect();
    let w = VertexWeighting::new(&g, weights).expect("one weight per vertex");
    (g, w)
}

/// A random labeled tree on `n` vertices (each vertex attaches to a random
/// earlier one, then labels are shuffled).
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges = (1..n)
        .map(|v| (perm[rng.gen_range(0..v)], perm[v]))
        .collect();
    Graph::new(n, edges).expect("in range")
}

/// A random forest on `1..=max_n` vertices: a random tree with each edge
/// dropped with probability one half.
pub fn random_forest<R: Rng>(rng: &mut R, max_n: usize) -> Forest {
    let n = rng.gen_range(1..=max_n);
    let t = random_tree(rng, n);
    let edges = t.edges().iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
    Forest::new(Graph::new(n, edges).expect("in range")).expect("subgraph of a tree")
}

/// A random nonempty subset of `0..m` with at most `max_size` elements.
pub fn random_edge_subset<R: Rng>(rng: &mut R, m: usize, max_size: usize) -> EdgeSet {
    assert!(m >= 1);
    let mut idx: Vec<usize> = (0..m).collect();
    idx.shuffle(rng);
    let k = rng.gen_range(1..=m.min(max_size));
    EdgeSet::from_indices(idx.into_iter().take(k))
}

/// A uniformly random relabeling of `g`.
pub fn shuffle_labels<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}
