//! Free-tree and unicyclic-graph generation, canonical certificates, and
//! structural classification.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::canon::{canonical_form_uncolored, canonical_graph};
use crate::graph::format::to_graph6;
use crate::graph::{Graph, Tree};

/// Largest order accepted by [`enumerate_trees`].
pub const MAX_TREE_ORDER: usize = 22;
/// Largest order accepted by [`enumerate_unicyclic`].
pub const MAX_UNICYCLIC_ORDER: usize = 10;

/// A canonical byte string; equal certificates mean isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate(pub Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

/// AHU encoding of `t` rooted at its center; for a bicentral tree the
/// smaller of the two rooted encodings.
pub fn canonical_certificate(t: &Tree) -> Certificate {
    let adj = t.graph().adjacency();
    let centers = centers(&adj);
    let best = centers
        .iter()
        .map(|&c| rooted_encoding(&adj, c))
        .min()
        .expect("a tree has a center");
    Certificate(best)
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in &adj[v] {
                if deg[u] > 1 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_encoding(adj: &[Vec<usize>], root: usize) -> Vec<u8> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([root]);
    parent[root] = root;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in &adj[v] {
            if parent[u] == usize::MAX {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    let mut child_codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    let mut code = Vec::new();
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut child_codes[v]);
        kids.sort_unstable();
        let mut enc = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        enc.push(b'(');
        for k in kids {
            enc.extend(k);
        }
        enc.push(b')');
        if v == root {
            code = enc;
        } else {
            child_codes[parent[v]].push(enc);
        }
    }
    code
}

/// Certificate of a small simple graph: graph6 of its canonical relabeling.
pub fn graph_certificate(g: &Graph) -> Result<Certificate> {
    Ok(Certificate(to_graph6(&canonical_graph(g))?.into_bytes()))
}

/// Trees by the number of vertices of degree at least 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TreeClass {
    Path,
    Spider,
    TwoBranch,
    Other,
}

impl TreeClass {
    pub fn label(&self) -> &'static str {
        match self {
            TreeClass::Path => "path",
            TreeClass::Spider => "spider",
            TreeClass::TwoBranch => "two-branch",
            TreeClass::Other => "other",
        }
    }
}

impl fmt::Display for TreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TreeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(TreeClass::Path),
            "spider" => Ok(TreeClass::Spider),
            "two-branch" => Ok(TreeClass::TwoBranch),
            "other" => Ok(TreeClass::Other),
            _ => Err(Error::Precondition(format!("unknown tree class {s:?}"))),
        }
    }
}

pub fn classify(t: &Tree) -> TreeClass {
    match t.graph().degrees().iter().filter(|&&d| d >= 3).count() {
        0 => TreeClass::Path,
        1 => TreeClass::Spider,
        2 => TreeClass::TwoBranch,
        _ => TreeClass::Other,
    }
}

/// One tree per isomorphism class on `n` vertices.
///
/// Generation walks canonical level sequences in the constant-time order of
/// Wright, Richmond, Odlyzko and McKay: each free tree appears exactly once,
/// rooted at its center, so the stream is duplicate-free by construction.
pub fn enumerate_trees(n: usize) -> Result<FreeTrees> {
    if n == 0 {
        return Err(Error::Precondition("tree order must be at least 1".into()));
    }
    if n > MAX_TREE_ORDER {
        return Err(Error::Capacity {
            what: "tree order",
            got: n,
            limit: MAX_TREE_ORDER,
        });
    }
    let state = if n == 1 {
        State::Single
    } else {
        let mut layout: Vec<usize> = (0..=n / 2).collect();
        layout.extend(1..n.div_ceil(2));
        State::Layout(layout)
    };
    Ok(FreeTrees { state })
}

#[derive(Clone, Debug)]
enum State {
    Single,
    Layout(Vec<usize>),
    Done,
}

/// Iterator returned by [`enumerate_trees`].
#[derive(Clone, Debug)]
pub struct FreeTrees {
    state: State,
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        match std::mem::replace(&mut self.state, State::Done) {
            State::Done => None,
            State::Single => Some(Tree::new(Graph::empty(1)).expect("K_1")),
            State::Layout(layout) => {
                let layout = next_tree(layout)?;
                let tree = layout_to_tree(&layout);
                if let Some(next) = next_rooted_tree(&layout, None) {
                    self.state = State::Layout(next);
                }
                Some(tree)
            }
        }
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == 1)
        .nth(1)
        .map(|(i, _)| i)
        .unwrap_or(layout.len());
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

// Advances to the next level sequence that is canonical as a free tree
// (the subtree hanging at the first child of the root must not outweigh
// the remainder), skipping runs of invalid candidates.
fn next_tree(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        let (left, rest) = split_tree(&candidate);
        let left_height = left.iter().copied().max().unwrap_or(0);
        let rest_height = rest.iter().copied().max().unwrap_or(0);
        let mut valid = rest_height >= left_height;
        if valid
            && rest_height == left_height
            && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
        {
            valid = false;
        }
        if valid {
            return Some(candidate);
        }
        let p = left.len();
        let mut next = next_rooted_tree(&candidate, Some(p))?;
        if candidate[p] > 2 {
            let (new_left, _) = split_tree(&next);
            let h = new_left.iter().copied().max().unwrap_or(0);
            let len = next.len();
            for (k, slot) in next[len - (h + 1)..].iter_mut().enumerate() {
                *slot = k + 1;
            }
        }
        candidate = next;
    }
}

fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut edges = Vec::with_capacity(layout.len() - 1);
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&j) = stack.last() {
            edges.push((j, i));
        }
        stack.push(i);
    }
    Tree::new(Graph::new(layout.len(), edges).expect("in range")).expect("level sequence is a tree")
}

/// One connected simple graph with `n` vertices and `n` edges per
/// isomorphism class, for `3 ≤ n ≤ 10`. Each tree on `n` vertices is
/// extended by every non-edge and the results are deduplicated by canonical
/// form. Output is in first-seen order and canonically labeled.
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Graph>> {
    if n < 3 {
        return Err(Error::Precondition("unicyclic graphs need n >= 3".into()));
    }
    if n > MAX_UNICYCLIC_ORDER {
        return Err(Error::Capacity {
            what: "unicyclic order",
            got: n,
            limit: MAX_UNICYCLIC_ORDER,
        });
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in enumerate_trees(n)? {
        for v in 0..n {
            for u in 0..v {
                if t.graph().has_edge(u, v) {
                    continue;
                }
                let mut g = t.graph().clone();
                g.add_edge(u, v).expect("in range");
                if seen.insert(canonical_form_uncolored(&g).code) {
                    out.push(canonical_graph(&g));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| enumerate_trees(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
    }

    #[test]
    fn order_limits() {
        assert!(enumerate_trees(0).is_err());
        assert!(matches!(enumerate_trees(23), Err(Error::Capacity { .. })));
        assert!(enumerate_unicyclic(2).is_err());
        assert!(matches!(enumerate_unicyclic(11), Err(Error::Capacity { .. })));
    }

    #[test]
    fn four_vertex_trees() {
        let certs: HashSet<_> = enumerate_trees(4).unwrap().map(|t| canonical_certificate(&t)).collect();
        let p4 = canonical_certificate(&Tree::new(Graph::path(4)).unwrap());
        let star = canonical_certificate(&Tree::new(Graph::star(3)).unwrap());
        assert_eq!(certs, HashSet::from([p4, star]));
    }

    #[test]
    fn certificates_of_relabelled_paths() {
        let a = Tree::new(Graph::path(4)).unwrap();
        let b = Tree::new(Graph::new(4, vec![(2, 0), (0, 3), (3, 1)]).unwrap()).unwrap();
        assert_eq!(canonical_certificate(&a), canonical_certificate(&b));
        assert_ne!(
            canonical_certificate(&a),
            canonical_certificate(&Tree::new(Graph::star(3)).unwrap())
        );
        assert_eq!(canonical_certificate(&Tree::new(Graph::empty(1)).unwrap()).to_string(), "()");
    }

    #[test]
    fn classes() {
        assert_eq!(classify(&Tree::new(Graph::path(6)).unwrap()), TreeClass::Path);
        assert_eq!(classify(&Tree::new(Graph::star(3)).unwrap()), TreeClass::Spider);
        let h = Graph::new(6, vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(classify(&Tree::new(h).unwrap()), TreeClass::TwoBranch);
        assert_eq!("two-branch".parse::<TreeClass>().unwrap(), TreeClass::TwoBranch);
        assert!("bush".parse::<TreeClass>().is_err());
    }

    #[test]
    fn unicyclic_small() {
        assert_eq!(enumerate_unicyclic(3).unwrap().len(), 1);
        assert_eq!(enumerate_unicyclic(4).unwrap().len(), 2);
        for g in enumerate_unicyclic(5).unwrap() {
            assert_eq!(g.m(), 5);
            assert!(g.is_connected() && g.is_simple());
        }
    }
}
