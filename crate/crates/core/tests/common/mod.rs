//! Brute-force oracles shared by the integration tests. They deliberately
//! avoid the library's algorithms and only use its data types.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use chromsym::graph::Graph;

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    r
}

/// `X_G` as a map from partition (weakly decreasing parts) to an integer
/// coefficient, by summing over all `2^m` edge subsets.
pub fn brute_csf(n: usize, edges: &[(usize, usize)], weights: &[u64]) -> BTreeMap<Vec<u64>, i64> {
    let m = edges.len();
    assert!(m < 24);
    let mut out: BTreeMap<Vec<u64>, i64> = BTreeMap::new();
    for mask in 0u32..(1 << m) {
        let mut parent: Vec<usize> = (0..n).collect();
        for (idx, &(u, v)) in edges.iter().enumerate() {
            if mask >> idx & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut totals = vec![0u64; n];
        for (v, &wv) in weights.iter().enumerate() {
            let r = find(&mut parent, v);
            totals[r] += wv;
        }
        let mut parts: Vec<u64> = totals.into_iter().filter(|&t| t > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *out.entry(parts).or_default() += sign;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Whether the vertices in `mask` induce a connected subgraph.
pub fn induced_connected(adj: &[Vec<usize>], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if mask >> w & 1 == 1 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen == mask
}

/// `{(|W|, e(W), d(W))}` counts over every vertex subset, the empty one included.
pub fn brute_gds(g: &Graph) -> BTreeMap<(usize, usize, usize), u64> {
    let n = g.n();
    let mut out = BTreeMap::new();
    for mask in 0u64..(1 << n) {
        let (mut e, mut d) = (0, 0);
        for &(u, v) in g.edges() {
            match (mask >> u & 1, mask >> v & 1) {
                (1, 1) => e += 1,
                (0, 0) => {}
                _ => d += 1,
            }
        }
        *out.entry((mask.count_ones() as usize, e, d)).or_insert(0) += 1;
    }
    out
}

/// `(|H|, d(V(H))) → count` over connected vertex subsets.
pub fn brute_f(g: &Graph) -> BTreeMap<(u32, u32), i64> {
    let adj = adjacency(g);
    let mut out = BTreeMap::new();
    for mask in 1u64..(1 << g.n()) {
        if !induced_connected(&adj, mask) {
            continue;
        }
        let d = g
            .edges()
            .iter()
            .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
            .count();
        *out.entry((mask.count_ones(), d as u32)).or_insert(0) += 1;
    }
    out
}

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        if u != v {
            adj[v].push(u);
        }
    }
    adj
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == perm.len() {
            out.push(perm.clone());
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, out);
            perm.swap(k, i);
        }
    }
    rec(0, &mut perm, &mut out);
    out
}

fn edge_multiset(edges: impl Iterator<Item = (usize, usize)>) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = edges.map(|(a, b)| (a.min(b), a.max(b))).collect();
    v.sort_unstable();
    v
}

/// Isomorphism by trying all `n!` relabelings.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let target = edge_multiset(h.edges().iter().copied());
    permutations(g.n())
        .into_iter()
        .any(|p| edge_multiset(g.edges().iter().map(|&(a, b)| (p[a], p[b]))) == target)
}

/// Smallest sorted edge list over all relabelings.
pub fn brute_canonical(g: &Graph) -> Vec<(usize, usize)> {
    permutations(g.n())
        .into_iter()
        .map(|p| edge_multiset(g.edges().iter().map(|&(a, b)| (p[a], p[b]))))
        .min()
        .unwrap_or_default()
}

/// All labeled trees on `n ≥ 2` vertices from Prüfer sequences.
pub fn prufer_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 2);
    if n == 2 {
        return vec![Graph::path(2)];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut seq = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            seq.push(c % n);
            c /= n;
        }
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(Graph::new(n, edges).unwrap());
    }
    out
}

/// Number of unordered vertex pairs at each distance `1..n−1`.
pub fn distance_counts(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj = adjacency(g);
    let mut counts = vec![0usize; n.saturating_sub(1)];
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for t in (s + 1)..n {
            counts[dist[t] - 1] += 1;
        }
    }
    counts
}

/// Number of vertices of each degree `1..n−1`.
pub fn degree_counts(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg = vec![0usize; n];
    for &(u, v) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut counts = vec![0usize; n.saturating_sub(1)];
    for d in deg {
        if d >= 1 {
            counts[d - 1] += 1;
        }
    }
    counts
}

/// Converts the library's polynomial to the oracle's representation.
pub fn to_map(p: &chromsym::symfunc::PPolynomial) -> BTreeMap<Vec<u64>, i64> {
    p.terms()
        .map(|(lambda, c)| {
            assert!(c.is_integer());
            let parts = lambda.parts().iter().map(|&x| x as u64).collect();
            (parts, c.to_integer().try_into().unwrap())
        })
        .collect()
}

pub fn sorted_set<T: Ord + Clone>(v: &[T]) -> BTreeSet<T> {
    v.iter().cloned().collect()
}
