//! Chromatic symmetric functions in the power-sum basis.
//!
//! Three independent routes are provided: the signed edge-subset expansion
//! (plain and vertex-weighted), the weighted deletion–contraction
//! recurrence, and the product over forest components. The identities used
//! to cross-check them (subtree derivatives, inclusion–exclusion over an
//! edge set, difference of two graphs with isomorphic contractions) live
//! here as well.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::graph::canon::weighted_isomorphic;
use crate::graph::{contract_edges, EdgeSet, Forest, Graph, VertexWeighting};
use crate::symfunc::{PPolynomial, Partition};

/// Maximum edge count for subset enumeration.
pub const MAX_EDGES: usize = 64;

/// A chromatic symmetric function together with the order (or total weight)
/// of the graph it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsfResult {
    pub poly: PPolynomial,
    pub source_order: u64,
}

impl CsfResult {
    /// `c_λ`.
    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.poly.coefficient(lambda)
    }

    /// Sum of `c_λ` over partitions with exactly `k` parts.
    pub fn level_sum(&self, k: usize) -> BigRational {
        self.poly
            .terms()
            .filter(|(l, _)| l.len() == k)
            .fold(BigRational::zero(), |acc, (_, c)| acc + c)
    }
}

/// `X_G = Σ_{A⊆E} (−1)^{|A|} p_{π(A)}`.
pub fn csf_power_sum(g: &Graph) -> Result<CsfResult> {
    csf_weighted(g, &VertexWeighting::unit(g.n()))
}

/// `X_{(G,w)} = Σ_{A⊆E} (−1)^{|A|} p_{π(G,w,A)}`; components of total
/// weight zero contribute `p_0 = 1`.
///
/// The subsets are walked depth-first, one edge decision per level, with a
/// union-find that is rolled back on the way up; the multiset of component
/// weights is maintained incrementally. When an edge would join a component
/// to itself (a loop, or an edge closing a cycle), including and excluding
/// it lead to identical subtrees of the walk with opposite signs, so that
/// branch contributes exactly zero and is skipped. In particular any loop
/// makes the whole sum vanish.
pub fn csf_weighted(g: &Graph, w: &VertexWeighting) -> Result<CsfResult> {
    w.check_for(g)?;
    if g.m() > MAX_EDGES {
        return Err(Error::Capacity {
            what: "edges for subset enumeration",
            got: g.m(),
            limit: MAX_EDGES,
        });
    }
    let total = w.total();
    let mut walk = SubsetWalk::new(g, w);
    walk.run(0, false);
    let poly = PPolynomial::from_integer_terms(
        walk.acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(key, c)| (Partition::from_counts(&key), c)),
    );
    Ok(CsfResult {
        poly,
        source_order: total,
    })
}

struct SubsetWalk<'a> {
    edges: &'a [(usize, usize)],
    parent: Vec<usize>,
    size: Vec<usize>,
    weight: Vec<u64>,
    // counts[k] = number of components of total weight k; counts[0] stays 0
    counts: Vec<u32>,
    acc: FxHashMap<Vec<u32>, i64>,
}

impl<'a> SubsetWalk<'a> {
    fn new(g: &'a Graph, w: &VertexWeighting) -> Self {
        let total = w.total() as usize;
        let mut counts = vec![0u32; total + 1];
        for &x in w.weights() {
            counts[x as usize] += 1;
        }
        counts[0] = 0;
        Self {
            edges: g.edges(),
            parent: (0..g.n()).collect(),
            size: vec![1; g.n()],
            weight: w.weights().to_vec(),
            counts,
            acc: FxHashMap::default(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn run(&mut self, k: usize, negative: bool) {
        if k == self.edges.len() {
            let delta = if negative { -1 } else { 1 };
            if let Some(c) = self.acc.get_mut(self.counts.as_slice()) {
                *c += delta;
            } else {
                self.acc.insert(self.counts.clone(), delta);
            }
            return;
        }
        let (u, v) = self.edges[k];
        let (mut a, mut b) = (self.find(u), self.find(v));
        if a == b {
            return;
        }
        self.run(k + 1, negative);

        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        let (wa, wb) = (self.weight[a], self.weight[b]);
        let merged = wa + wb;
        self.counts[wa as usize] -= u32::from(wa > 0);
        self.counts[wb as usize] -= u32::from(wb > 0);
        self.counts[merged as usize] += u32::from(merged > 0);
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.weight[a] = merged;

        self.run(k + 1, !negative);

        self.weight[a] = wa;
        self.size[a] -= self.size[b];
        self.parent[b] = b;
        self.counts[merged as usize] -= u32::from(merged > 0);
        self.counts[wb as usize] += u32::from(wb > 0);
        self.counts[wa as usize] += u32::from(wa > 0);
    }
}

/// Evaluates `X_{(G,w)} = X_{(G−e,w)} − X_{(G/e,w_{G/e})}` recursively.
///
/// The edge chosen at each step is the lowest-index non-loop edge (its
/// contraction removes a vertex); only when every edge is a loop is a loop
/// chosen, and then deletion and contraction coincide so the difference is
/// zero. The base case is the edgeless graph, `p_{w_1} ⋯ p_{w_n}`.
pub fn csf_deletion_contraction(g: &Graph, w: &VertexWeighting) -> Result<CsfResult> {
    w.check_for(g)?;
    Ok(CsfResult {
        poly: deletion_contraction(g, w)?,
        source_order: w.total(),
    })
}

fn deletion_contraction(g: &Graph, w: &VertexWeighting) -> Result<PPolynomial> {
    if g.m() == 0 {
        return Ok(PPolynomial::monomial(Partition::from_weights(
            w.weights().iter().copied(),
        )));
    }
    let Some(e) = g.edges().iter().position(|&(u, v)| u != v) else {
        return Ok(PPolynomial::zero());
    };
    let single = EdgeSet::from_indices([e]);
    let deleted = g.delete_edges(&single)?;
    let (contracted, cw) = contract_edges(g, w, &single)?;
    Ok(deletion_contraction(&deleted, w)? - deletion_contraction(&contracted, &cw)?)
}

/// `X_F = ∏ X_{T_i}` over the component trees of `F`.
pub fn csf_forest(f: &Forest) -> Result<CsfResult> {
    let mut poly = PPolynomial::one();
    for (t, _) in f.components() {
        poly = &poly * &csf_power_sum(t.graph())?.poly;
    }
    Ok(CsfResult {
        poly,
        source_order: f.n() as u64,
    })
}

/// `(−1)^{j−1} Σ_H X_{F−V(H)}` over all `j`-vertex subtrees `H` of `F`.
pub fn subtree_derivative(f: &Forest, j: u32) -> Result<PPolynomial> {
    if j == 0 {
        return Err(Error::Precondition("j must be positive".into()));
    }
    let mut sum = PPolynomial::zero();
    for h in f.enumerate_subtrees()? {
        if h.len() != j as usize {
            continue;
        }
        let rest = f.graph().remove_vertices(&h);
        sum = sum + csf_power_sum(&rest)?.poly;
    }
    Ok(if j % 2 == 1 { sum } else { -sum })
}

fn sign(k: usize) -> BigRational {
    if k.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// `Σ_{∅≠I⊆S} (−1)^{|I|−1} X_{(G−I,w)} + (−1)^{|S|} X_{(G/S, w_{G/S})}`,
/// which equals `X_{(G,w)}`.
pub fn inclusion_exclusion_rhs(g: &Graph, w: &VertexWeighting, s: &EdgeSet) -> Result<PPolynomial> {
    if s.is_empty() {
        return Err(Error::Precondition("S must be nonempty".into()));
    }
    s.check_within(g.m())?;
    let mut out = signed_deletions(g, w, s)?;
    let (contracted, cw) = contract_edges(g, w, s)?;
    out = out + csf_weighted(&contracted, &cw)?.poly.scale(&sign(s.len()));
    Ok(out)
}

fn signed_deletions(g: &Graph, w: &VertexWeighting, s: &EdgeSet) -> Result<PPolynomial> {
    let mut out = PPolynomial::zero();
    for i in s.nonempty_subsets() {
        let term = csf_weighted(&g.delete_edges(&i)?, w)?.poly;
        out = out + term.scale(&sign(i.len() - 1));
    }
    Ok(out)
}

/// Both sides of the difference identity for two graphs whose unit-weight
/// contractions `(G/S)` and `(H/T)` are isomorphic as weighted graphs:
/// `lhs = X_G − X_H` and
/// `rhs = Σ_{∅≠I⊆S}(−1)^{|I|−1}X_{G−I} − Σ_{∅≠J⊆T}(−1)^{|J|−1}X_{H−J}`.
pub fn corollary_difference(
    g: &Graph,
    s: &EdgeSet,
    h: &Graph,
    t: &EdgeSet,
) -> Result<(PPolynomial, PPolynomial)> {
    if s.is_empty() || t.is_empty() {
        return Err(Error::Precondition("S and T must be nonempty".into()));
    }
    let (wg, wh) = (VertexWeighting::unit(g.n()), VertexWeighting::unit(h.n()));
    let (gs, gsw) = contract_edges(g, &wg, s)?;
    let (ht, htw) = contract_edges(h, &wh, t)?;
    if !weighted_isomorphic(&gs, &gsw, &ht, &htw) {
        return Err(Error::Precondition(
            "weighted contractions G/S and H/T are not isomorphic".into(),
        ));
    }
    let lhs = csf_power_sum(g)?.poly - csf_power_sum(h)?.poly;
    let rhs = signed_deletions(g, &wg, s)? - signed_deletions(h, &wh, t)?;
    Ok((lhs, rhs))
}

/// `(−1)^{n−k} C(n−j, k−j)`, the level sum predicted for an `n`-vertex
/// forest with `j` components.
pub fn forest_level_sum(n: usize, j: usize, k: usize) -> BigRational {
    if k < j || k > n {
        return BigRational::zero();
    }
    let c = crate::binomial((n - j) as i64, (k - j) as i64);
    BigRational::from_integer(BigInt::from(c)) * sign(n - k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Tree;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(terms: &[(&[u32], i64)]) -> PPolynomial {
        PPolynomial::from_integer_terms(terms.iter().map(|(l, c)| (part(l), *c)))
    }

    fn weighted(g: &Graph, ws: &[u64]) -> VertexWeighting {
        VertexWeighting::new(g, ws.to_vec()).unwrap()
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(csf_power_sum(&Graph::empty(1)).unwrap().poly, poly(&[(&[1], 1)]));
        let p3 = csf_power_sum(&Graph::path(3)).unwrap();
        assert_eq!(p3.poly, poly(&[(&[1, 1, 1], 1), (&[2, 1], -2), (&[3], 1)]));
        assert_eq!(p3.source_order, 3);
        let looped = Graph::new(3, vec![(0, 1), (1, 1), (1, 2)]).unwrap();
        assert!(csf_power_sum(&looped).unwrap().poly.is_zero());
        assert_eq!(csf_power_sum(&Graph::empty(0)).unwrap().poly, PPolynomial::one());
    }

    #[test]
    fn triangle_by_hand() {
        // 1 empty set, 3 single edges, 3 pairs and the full triangle (connected)
        let tri = csf_power_sum(&Graph::cycle(3)).unwrap().poly;
        assert_eq!(tri, poly(&[(&[1, 1, 1], 1), (&[2, 1], -3), (&[3], 2)]));
    }

    #[test]
    fn parallel_edges_do_not_change_csf() {
        let g = Graph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(csf_power_sum(&g).unwrap(), csf_power_sum(&Graph::path(3)).unwrap());
    }

    #[test]
    fn capacity_error() {
        let g = Graph::new(2, vec![(0, 1); 65]).unwrap();
        assert!(matches!(csf_power_sum(&g), Err(Error::Capacity { .. })));
    }

    #[test]
    fn weighted_examples() {
        let k1 = Graph::empty(1);
        assert_eq!(csf_weighted(&k1, &weighted(&k1, &[5])).unwrap().poly, poly(&[(&[5], 1)]));
        let k2 = Graph::path(2);
        assert_eq!(
            csf_weighted(&k2, &VertexWeighting::unit(2)).unwrap().poly,
            poly(&[(&[1, 1], 1), (&[2], -1)])
        );
        let r = csf_weighted(&k2, &weighted(&k2, &[2, 1])).unwrap();
        assert_eq!(r.poly, poly(&[(&[2, 1], 1), (&[3], -1)]));
        assert_eq!(r.source_order, 3);
    }

    #[test]
    fn zero_weights_drop_parts() {
        let k2 = Graph::path(2);
        let r = csf_weighted(&k2, &weighted(&k2, &[0, 2])).unwrap();
        assert_eq!(r.poly, poly(&[(&[2], 1), (&[2], -1)]));
        assert!(r.poly.is_zero());
        let e2 = Graph::empty(2);
        let r = csf_weighted(&e2, &weighted(&e2, &[0, 0])).unwrap();
        assert_eq!(r.poly, PPolynomial::one());
    }

    #[test]
    fn deletion_contraction_examples() {
        let k2 = Graph::path(2);
        let dc = csf_deletion_contraction(&k2, &VertexWeighting::unit(2)).unwrap();
        assert_eq!(dc.poly, poly(&[(&[1, 1], 1), (&[2], -1)]));
        let looped = Graph::new(1, vec![(0, 0)]).unwrap();
        assert!(csf_deletion_contraction(&looped, &VertexWeighting::unit(1)).unwrap().poly.is_zero());
        let tri = Graph::cycle(3);
        assert_eq!(
            csf_deletion_contraction(&tri, &VertexWeighting::unit(3)).unwrap().poly,
            csf_power_sum(&tri).unwrap().poly
        );
    }

    #[test]
    fn forest_examples() {
        let two = Forest::new(Graph::empty(2)).unwrap();
        assert_eq!(csf_forest(&two).unwrap().poly, poly(&[(&[1, 1], 1)]));
        let k2k1 = Forest::new(Graph::path(2).disjoint_union(&Graph::empty(1))).unwrap();
        assert_eq!(csf_forest(&k2k1).unwrap().poly, poly(&[(&[1, 1, 1], 1), (&[2, 1], -1)]));
        let pp = Graph::path(3).disjoint_union(&Graph::path(3));
        assert_eq!(
            csf_forest(&Forest::new(pp.clone()).unwrap()).unwrap().poly,
            csf_power_sum(&pp).unwrap().poly
        );
    }

    #[test]
    fn coefficients_and_levels() {
        let p3 = csf_power_sum(&Graph::path(3)).unwrap();
        assert_eq!(p3.coefficient(&part(&[2, 1])), BigRational::from_integer((-2).into()));
        assert_eq!(p3.level_sum(2), BigRational::from_integer((-2).into()));
        assert_eq!(p3.level_sum(2), forest_level_sum(3, 1, 2));
        let star = csf_power_sum(&Graph::star(4)).unwrap();
        assert_eq!(star.coefficient(&part(&[1; 5])), BigRational::one());
    }

    #[test]
    fn subtree_derivative_examples() {
        let p3 = Forest::new(Graph::path(3)).unwrap();
        assert_eq!(subtree_derivative(&p3, 3).unwrap(), PPolynomial::one());
        assert_eq!(subtree_derivative(&p3, 2).unwrap(), poly(&[(&[1], -2)]));
        let star = Tree::new(Graph::star(3)).unwrap();
        let x = csf_power_sum(star.graph()).unwrap().poly;
        let f = star.as_forest();
        assert_eq!(subtree_derivative(&f, 1).unwrap(), x.partial_derivative(1));
        // removing the center leaves three isolated vertices, removing a leaf leaves P_3
        let isolated = csf_power_sum(&Graph::empty(3)).unwrap().poly;
        let expected = isolated + csf_power_sum(&Graph::path(3)).unwrap().poly.scale(&BigRational::from_integer(3.into()));
        assert_eq!(subtree_derivative(&f, 1).unwrap(), expected);
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let p3 = Graph::path(3);
        let unit = VertexWeighting::unit(3);
        let x = csf_power_sum(&p3).unwrap().poly;
        assert_eq!(inclusion_exclusion_rhs(&p3, &unit, &EdgeSet::full(2)).unwrap(), x);
        // |S| = 1 is deletion–contraction
        let s = EdgeSet::from_indices([0]);
        let del = csf_weighted(&p3.delete_edges(&s).unwrap(), &unit).unwrap().poly;
        let (c, cw) = contract_edges(&p3, &unit, &s).unwrap();
        let con = csf_weighted(&c, &cw).unwrap().poly;
        assert_eq!(inclusion_exclusion_rhs(&p3, &unit, &s).unwrap(), &del - &con);
        assert!(inclusion_exclusion_rhs(&p3, &unit, &EdgeSet::empty()).is_err());
    }

    #[test]
    fn corollary_examples() {
        let h = Graph::new(6, vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let s = EdgeSet::from_indices([0]);
        let (lhs, rhs) = corollary_difference(&h, &s, &h, &s).unwrap();
        assert!(lhs.is_zero() && rhs.is_zero());

        // triangle move: G has uv1, uv2 with v1, v2 non-adjacent; H = G − uv1 + v1v2
        let g = Graph::new(5, vec![(0, 1), (0, 2), (2, 3), (1, 4)]).unwrap();
        let h = Graph::new(5, vec![(1, 2), (0, 2), (2, 3), (1, 4)]).unwrap();
        let s = EdgeSet::from_indices([1]);
        let (lhs, rhs) = corollary_difference(&g, &s, &h, &s).unwrap();
        assert_eq!(lhs, rhs);

        let bad = corollary_difference(&Graph::path(4), &EdgeSet::from_indices([0]), &Graph::star(3), &EdgeSet::from_indices([0]));
        assert!(matches!(bad, Err(Error::Precondition(_))));
    }
}
