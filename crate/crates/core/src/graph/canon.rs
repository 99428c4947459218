//! Canonical labeling of small vertex-colored multigraphs by
//! individualization and refinement.
//!
//! Colors are refined to an equitable ordered partition; the first
//! non-singleton cell is split by individualizing each of its vertices in
//! turn, and the canonical code is the minimum over all discrete leaves.
//! Twin vertices (identical rows of the multiplicity matrix) are
//! interchangeable, so only one of them is individualized per cell.
//! Without further automorphism pruning this is meant for small graphs
//! (tens of vertices).

use super::{Graph, VertexWeighting};

/// The canonical code of a colored multigraph, plus the labeling that attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `[n, colors in canonical order…, upper-triangular multiplicities…]`.
    pub code: Vec<u64>,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
}

struct Search<'a> {
    n: usize,
    mult: Vec<u32>,
    colors: &'a [u64],
    best: Option<CanonicalForm>,
}

/// Canonical form of `g` with vertex colors (for example weights).
pub fn canonical_form(g: &Graph, colors: &[u64]) -> CanonicalForm {
    let n = g.n();
    assert_eq!(colors.len(), n);
    let mut mult = vec![0u32; n * n];
    for &(u, v) in g.edges() {
        mult[u * n + v] += 1;
        if u != v {
            mult[v * n + u] += 1;
        }
    }
    let mut search = Search {
        n,
        mult,
        colors,
        best: None,
    };
    let initial = rank(colors);
    search.descend(initial);
    search.best.expect("at least one leaf")
}

/// Canonical form of an uncolored graph.
pub fn canonical_form_uncolored(g: &Graph) -> CanonicalForm {
    canonical_form(g, &vec![0; g.n()])
}

/// `g` relabeled into canonical order, with edges sorted.
pub fn canonical_graph(g: &Graph) -> Graph {
    let form = canonical_form_uncolored(g);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (form.labeling[u], form.labeling[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable_by_key(|&(a, b)| (b, a));
    Graph::new(g.n(), edges).expect("relabeling stays in range")
}

/// Isomorphism of weighted multigraphs: a vertex bijection preserving edge
/// multiplicities, loops, and weights.
pub fn weighted_isomorphic(
    g: &Graph,
    w: &VertexWeighting,
    h: &Graph,
    wh: &VertexWeighting,
) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut a = w.weights().to_vec();
    let mut b = wh.weights().to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return false;
    }
    canonical_form(g, w.weights()).code == canonical_form(h, wh.weights()).code
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.m() == h.m()
        && canonical_form_uncolored(g).code == canonical_form_uncolored(h).code
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("present"))
        .collect()
}

impl Search<'_> {
    fn refine(&self, mut cells: Vec<usize>) -> Vec<usize> {
        let n = self.n;
        let mut count = distinct(&cells);
        loop {
            let sigs: Vec<(usize, Vec<(usize, u32)>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(usize, u32)> = (0..n)
                        .filter(|&u| self.mult[v * n + u] > 0)
                        .map(|u| {
                            let tag = if u == v { usize::MAX } else { cells[u] };
                            (tag, self.mult[v * n + u])
                        })
                        .collect();
                    nb.sort_unstable();
                    (cells[v], nb)
                })
                .collect();
            cells = rank(&sigs);
            let next = distinct(&cells);
            if next == count {
                return cells;
            }
            count = next;
        }
    }

    fn descend(&mut self, cells: Vec<usize>) {
        let n = self.n;
        let cells = self.refine(cells);
        if distinct(&cells) == n {
            self.leaf(&cells);
            return;
        }
        let mut sizes = vec![0usize; n];
        for &c in &cells {
            sizes[c] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1).expect("non-discrete");
        let members: Vec<usize> = (0..n).filter(|&v| cells[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if explored.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            explored.push(v);
            let split: Vec<usize> = (0..n)
                .map(|x| {
                    if x == v || cells[x] != target {
                        2 * cells[x]
                    } else {
                        2 * cells[x] + 1
                    }
                })
                .collect();
            self.descend(rank(&split));
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let n = self.n;
        if self.colors[u] != self.colors[v] || self.mult[u * n + u] != self.mult[v * n + v] {
            return false;
        }
        (0..n)
            .filter(|&x| x != u && x != v)
            .all(|x| self.mult[u * n + x] == self.mult[v * n + x])
    }

    fn leaf(&mut self, labeling: &[usize]) {
        let n = self.n;
        let mut inverse = vec![0; n];
        for (v, &pos) in labeling.iter().enumerate() {
            inverse[pos] = v;
        }
        let mut code = Vec::with_capacity(1 + n + n * (n + 1) / 2);
        code.push(n as u64);
        code.extend(inverse.iter().map(|&v| self.colors[v]));
        for j in 0..n {
            for i in 0..=j {
                code.push(u64::from(self.mult[inverse[i] * n + inverse[j]]));
            }
        }
        let better = match &self.best {
            None => true,
            Some(b) => code < b.code,
        };
        if better {
            self.best = Some(CanonicalForm {
                code,
                labeling: labeling.to_vec(),
            });
        }
    }
}

fn distinct(cells: &[usize]) -> usize {
    let mut seen = vec![false; cells.len()];
    let mut count = 0;
    for &c in cells {
        if !seen[c] {
            seen[c] = true;
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn brute_force_code(g: &Graph) -> Vec<u64> {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<u64>> = None;
        permute_all(&mut perm, 0, &mut |p| {
            let h = g.relabel(p);
            let mut code = vec![0u64; n * n];
            for &(u, v) in h.edges() {
                code[u.min(v) * n + u.max(v)] += 1;
            }
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        });
        best.unwrap()
    }

    fn permute_all(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute_all(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn relabeling_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let graphs = [
            Graph::cycle(7),
            Graph::complete(5),
            Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (3, 5), (1, 1), (4, 5), (4, 5)]).unwrap(),
            Graph::empty(6),
            Graph::star(6),
        ];
        for g in graphs {
            let base = canonical_form_uncolored(&g).code;
            for _ in 0..20 {
                let mut perm: Vec<usize> = (0..g.n()).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form_uncolored(&g.relabel(&perm)).code, base);
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_on_equivalence() {
        // Graph pairs on 6 vertices: isomorphic iff brute-force codes match.
        let graphs = [
            Graph::cycle(6),
            Graph::cycle(3).disjoint_union(&Graph::cycle(3)),
            Graph::path(6),
            Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
            Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap(),
            Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (2, 3), (2, 4), (2, 5)]).unwrap(),
        ];
        for a in &graphs {
            for b in &graphs {
                assert_eq!(
                    isomorphic(a, b),
                    brute_force_code(a) == brute_force_code(b),
                    "{a:?} vs {b:?}"
                );
            }
        }
    }

    #[test]
    fn weights_distinguish() {
        let p3 = Graph::path(3);
        let a = VertexWeighting::new(&p3, vec![2, 1, 1]).unwrap();
        let b = VertexWeighting::new(&p3, vec![1, 1, 2]).unwrap();
        let c = VertexWeighting::new(&p3, vec![1, 2, 1]).unwrap();
        assert!(weighted_isomorphic(&p3, &a, &p3, &b));
        assert!(!weighted_isomorphic(&p3, &a, &p3, &c));
    }

    #[test]
    fn canonical_graph_is_invariant() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let h = g.relabel(&[4, 2, 0, 3, 1]);
        assert_eq!(canonical_graph(&g), canonical_graph(&h));
    }
}
