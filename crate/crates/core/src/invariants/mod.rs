//! Tree invariants: the subtree polynomial `S_T(q, r)`, the
//! generalized-degree polynomial `F_T(x, y)`, and the explicit linear map
//! taking the power-sum coefficients of `X_T` to the coefficients of `F_T`.

mod bivariate;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub use bivariate::BivariatePolynomial;

use crate::binomial;
use crate::csf::CsfResult;
use crate::error::{Error, Result};
use crate::graph::{Graph, Tree, VertexSet};
use crate::symfunc::{partitions, PPolynomial, Partition};

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    let mut masks = vec![0u64; g.n()];
    for &(u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    masks
}

/// `S_T(q, r) = Σ_S q^{|E(S)|} r^{|L(S)|}` over subtrees `S`, where `L(S)`
/// are the edges of `S` incident with a leaf of `S`.
pub fn subtree_polynomial(t: &Tree) -> Result<BivariatePolynomial> {
    let masks = neighbor_masks(t.graph());
    let mut out = BivariatePolynomial::new();
    for w in t.enumerate_subtrees()? {
        let edges = w.len() as u32 - 1;
        let in_w_degree = |v: usize| (masks[v] & w.0).count_ones();
        let leaf_edges = t
            .graph()
            .edges()
            .iter()
            .filter(|&&(u, v)| w.contains(u) && w.contains(v))
            .filter(|&&(u, v)| in_w_degree(u) == 1 || in_w_degree(v) == 1)
            .count() as u32;
        out.add(edges, leaf_edges, 1);
    }
    Ok(out)
}

/// Degree and path statistics read off a subtree polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeStats {
    /// `(d_1, …, d_{n−1})`.
    pub degrees: Vec<usize>,
    /// `(s_1, …, s_{n−1})`.
    pub paths: Vec<usize>,
}

/// Recovers degree counts for `i ≥ 2` via
/// `d_i = Σ_{k≥i} C(k,i)(−1)^{i+k} s(k,k)` and path counts via
/// `s_i = s(i, 2)` (with `s_1 = s(1, 1)`).
///
/// The alternating sum does not give `d_1`: a single edge is one subtree
/// with `s(1,1)` counting it once, while the star count needs it twice.
/// `d_1` is taken as `n` minus the other degree counts instead.
pub fn stats_from_subtree_polynomial(s: &BivariatePolynomial, n: usize) -> Result<TreeStats> {
    let len = n.saturating_sub(1);
    let mut degrees = vec![0usize; len];
    let to_count = |v: i64, what: &str| -> Result<usize> {
        usize::try_from(v).map_err(|_| {
            Error::Consistency(format!("{what} came out negative ({v}); not a subtree polynomial"))
        })
    };
    for i in 2..=len {
        let mut acc = 0i64;
        for k in i..=len {
            let sign = if (i + k) % 2 == 0 { 1 } else { -1 };
            acc += sign * binomial(k as i64, i as i64) * s.coefficient(k as u32, k as u32);
        }
        degrees[i - 1] = to_count(acc, "degree count")?;
    }
    if len >= 1 {
        let rest: usize = degrees.iter().sum();
        degrees[0] = n
            .checked_sub(rest)
            .ok_or_else(|| Error::Consistency("degree counts exceed vertex count".into()))?;
    }
    let mut paths = vec![0usize; len];
    for i in 1..=len {
        let c = if i == 1 {
            s.coefficient(1, 1)
        } else {
            s.coefficient(i as u32, 2)
        };
        paths[i - 1] = to_count(c, "path count")?;
    }
    Ok(TreeStats { degrees, paths })
}

/// `F_T(x, y) = Σ_H x^{|H|} y^{d(V(H))}` by enumerating subtrees and
/// counting boundary edges.
pub fn f_polynomial_direct(t: &Tree) -> Result<BivariatePolynomial> {
    let mut out = BivariatePolynomial::new();
    for w in t.enumerate_subtrees()? {
        let (_, boundary) = t.graph().boundary_and_interior(&w);
        out.add(w.len() as u32, boundary as u32, 1);
    }
    Ok(out)
}

/// `σ(λ, i, j) = (−1)^{n−j−1} C(n−i−l(λ)+1, j−l(λ)+1) · m_i(λ)` where
/// `m_i(λ)` is the number of parts equal to `i`. Binomials outside their
/// range are zero.
pub fn sigma(lambda: &Partition, i: u32, j: u32, n: u32) -> i64 {
    let m = lambda.multiplicity(i) as i64;
    if m == 0 {
        return 0;
    }
    let (n, i, j, l) = (n as i64, i as i64, j as i64, lambda.len() as i64);
    let c = binomial(n - i - l + 1, j - l + 1);
    if c == 0 {
        return 0;
    }
    let sign = if (n - j - 1).rem_euclid(2) == 0 { 1 } else { -1 };
    sign * c * m
}

/// Signature of a σ-like kernel, so alternative kernels can be swapped in.
pub type SigmaFn = fn(&Partition, u32, u32, u32) -> i64;

fn checked_tree_csf(x: &PPolynomial, n: usize) -> Result<()> {
    if x.is_zero() || !x.is_homogeneous_of_degree(n as u64) {
        return Err(Error::Consistency(format!(
            "input is not a nonzero homogeneous symmetric function of degree {n}"
        )));
    }
    Ok(())
}

fn to_count(v: &BigRational, i: u32, j: u32) -> Result<i64> {
    if !v.is_integer() {
        return Err(Error::Consistency(format!("f({i},{j}) = {v} is not an integer")));
    }
    if v.is_negative() {
        return Err(Error::Consistency(format!("f({i},{j}) = {v} is negative")));
    }
    v.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Consistency(format!("f({i},{j}) overflows i64")))
}

/// `F_T` from `X_T`: `f(i,j) = Σ_{λ⊢n} σ(λ,i,j) c_λ` for `1 ≤ i ≤ n`,
/// `0 ≤ j ≤ n − i`. Fails when the input cannot be the CSF of an `n`-vertex
/// tree (wrong degree, or a coefficient comes out negative or fractional).
pub fn f_polynomial_from_csf(x: &CsfResult, n: usize) -> Result<BivariatePolynomial> {
    f_polynomial_from_csf_with(&x.poly, n, sigma)
}

/// As [`f_polynomial_from_csf`] with an explicit kernel.
pub fn f_polynomial_from_csf_with(
    x: &PPolynomial,
    n: usize,
    kernel: SigmaFn,
) -> Result<BivariatePolynomial> {
    checked_tree_csf(x, n)?;
    let nn = n as u32;
    let mut out = BivariatePolynomial::new();
    for i in 1..=nn {
        for j in 0..=(nn - i) {
            let mut acc = BigRational::zero();
            for (lambda, c) in x.terms() {
                let s = kernel(lambda, i, j, nn);
                if s != 0 {
                    acc += c * BigRational::from_integer(BigInt::from(s));
                }
            }
            out.add(i, j, to_count(&acc, i, j)?);
        }
    }
    Ok(out)
}

/// The graded pieces of `Ω_n(x, y)`: for each `(i, j)`, the symmetric
/// function `Σ_λ σ(λ,i,j) p_λ / z_λ`. Pairing with `X_T` under the scalar
/// product gives `f_T(i, j)`.
#[derive(Clone, Debug)]
pub struct OmegaKernel {
    n: usize,
    pieces: Vec<((u32, u32), PPolynomial)>,
}

impl OmegaKernel {
    pub fn new(n: usize) -> Self {
        let nn = n as u32;
        let all: Vec<Partition> = partitions(nn).collect();
        let mut pieces = Vec::new();
        for i in 1..=nn {
            for j in 0..=(nn - i) {
                let piece = PPolynomial::from_terms(all.iter().filter_map(|lambda| {
                    let s = sigma(lambda, i, j, nn);
                    (s != 0).then(|| {
                        (
                            lambda.clone(),
                            BigRational::new(BigInt::from(s), lambda.z()),
                        )
                    })
                }));
                pieces.push(((i, j), piece));
            }
        }
        Self { n, pieces }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn piece(&self, i: u32, j: u32) -> Option<&PPolynomial> {
        self.pieces
            .iter()
            .find(|((a, b), _)| *a == i && *b == j)
            .map(|(_, p)| p)
    }

    /// `F_T(x, y) = ⟨Ω_n(x, y), X_T⟩`, coefficient by coefficient.
    pub fn apply(&self, x: &PPolynomial) -> Result<BivariatePolynomial> {
        checked_tree_csf(x, self.n)?;
        let mut out = BivariatePolynomial::new();
        for ((i, j), piece) in &self.pieces {
            let v = piece.scalar_product(x);
            out.add(*i, *j, to_count(&v, *i, *j)?);
        }
        Ok(out)
    }
}

/// `F_T` via the scalar-product route.
pub fn omega_check(x: &CsfResult, n: usize) -> Result<BivariatePolynomial> {
    OmegaKernel::new(n).apply(&x.poly)
}

/// Dense square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    size: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(size: usize) -> Self {
        let mut data = vec![0; size * size];
        for d in 0..size {
            data[d * size + d] = 1;
        }
        Self { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.data[(row - 1) * self.size + (col - 1)]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.size, other.size);
        let k = self.size;
        let mut data = vec![0i64; k * k];
        for r in 0..k {
            for m in 0..k {
                let a = self.data[r * k + m];
                if a == 0 {
                    continue;
                }
                for c in 0..k {
                    data[r * k + c] += a * other.data[m * k + c];
                }
            }
        }
        IntMatrix { size: k, data }
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.size);
        (0..self.size)
            .map(|r| (0..self.size).map(|c| self.data[r * self.size + c] * v[c]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.size)
    }
}

/// The lower-triangular `k × k` matrix with entries
/// `a_{m,j} = (−1)^{n−m−1} C(n−i−j, m−j)` for `m ≥ j` (1-based), zero above
/// the diagonal. It relates the level sums of `∂X_T/∂p_i` to the column
/// `(f_T(i, 1), …, f_T(i, k))`, and squares to the identity.
pub fn sign_binomial_matrix(k: usize, n: usize, i: usize) -> IntMatrix {
    let mut data = vec![0i64; k * k];
    for m in 1..=k {
        for j in 1..=m {
            let sign = if (n as i64 - m as i64 - 1).rem_euclid(2) == 0 { 1 } else { -1 };
            let c = binomial(n as i64 - i as i64 - j as i64, (m - j) as i64);
            data[(m - 1) * k + (j - 1)] = sign * c;
        }
    }
    IntMatrix { size: k, data }
}

/// Cap on vertices for the brute-force generalized degree sequence.
pub const MAX_GDS_VERTICES: usize = 24;

/// The multiset `{(|W|, e(W), d(W)) : W ⊆ V}` as triple → multiplicity,
/// including the empty set.
pub fn generalized_degree_sequence(g: &Graph) -> Result<BTreeMap<(usize, usize, usize), u64>> {
    if g.n() > MAX_GDS_VERTICES {
        return Err(Error::Capacity {
            what: "vertices for generalized degree sequence",
            got: g.n(),
            limit: MAX_GDS_VERTICES,
        });
    }
    let mut out = BTreeMap::new();
    for mask in 0u64..(1u64 << g.n()) {
        let w = VertexSet(mask);
        let (e, d) = g.boundary_and_interior(&w);
        *out.entry((w.len(), e, d)).or_insert(0) += 1;
    }
    Ok(out)
}

/// The `(|W|, d(W))` multiset of the slice `e(W) = |W| − 1`, `W ≠ ∅`. For a
/// tree these `W` are exactly the subtrees, so the result is the exponent
/// multiset of `F_T`.
pub fn subtree_slice(gds: &BTreeMap<(usize, usize, usize), u64>) -> BTreeMap<(usize, usize), u64> {
    let mut out = BTreeMap::new();
    for (&(size, e, d), &count) in gds {
        if size >= 1 && e + 1 == size {
            *out.entry((size, d)).or_insert(0) += count;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csf::csf_power_sum;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tree(g: Graph) -> Tree {
        Tree::new(g).unwrap()
    }

    fn bp(terms: &[((u32, u32), i64)]) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn subtree_polynomial_examples() {
        assert_eq!(subtree_polynomial(&tree(Graph::path(2))).unwrap(), bp(&[((0, 0), 2), ((1, 1), 1)]));
        assert_eq!(
            subtree_polynomial(&tree(Graph::path(3))).unwrap(),
            bp(&[((0, 0), 3), ((1, 1), 2), ((2, 2), 1)])
        );
        assert_eq!(
            subtree_polynomial(&tree(Graph::star(3))).unwrap(),
            bp(&[((0, 0), 4), ((1, 1), 3), ((2, 2), 3), ((3, 3), 1)])
        );
        // the whole P_4 has a middle edge that is not a leaf edge
        assert_eq!(subtree_polynomial(&tree(Graph::path(4))).unwrap().coefficient(3, 2), 1);
    }

    #[test]
    fn stats_examples() {
        let s = subtree_polynomial(&tree(Graph::path(3))).unwrap();
        let st = stats_from_subtree_polynomial(&s, 3).unwrap();
        assert_eq!(st.degrees, vec![2, 1]);
        let s = subtree_polynomial(&tree(Graph::star(3))).unwrap();
        let st = stats_from_subtree_polynomial(&s, 4).unwrap();
        assert_eq!(st.degrees, vec![3, 0, 1]);
        assert_eq!(st.paths, vec![3, 3, 0]);
        let s = subtree_polynomial(&tree(Graph::path(4))).unwrap();
        assert_eq!(stats_from_subtree_polynomial(&s, 4).unwrap().paths, vec![3, 2, 1]);
    }

    #[test]
    fn alternating_sum_fails_for_leaves() {
        // The i = 1 instance of the alternating sum yields 0 on P_3, not 2.
        let s = subtree_polynomial(&tree(Graph::path(3))).unwrap();
        let raw: i64 = (1..=2)
            .map(|k| {
                let sign = if (1 + k) % 2 == 0 { 1 } else { -1 };
                sign * binomial(k, 1) * s.coefficient(k as u32, k as u32)
            })
            .sum();
        assert_eq!(raw, 0);
    }

    #[test]
    fn f_direct_examples() {
        assert_eq!(f_polynomial_direct(&tree(Graph::empty(1))).unwrap(), bp(&[((1, 0), 1)]));
        assert_eq!(
            f_polynomial_direct(&tree(Graph::path(3))).unwrap(),
            bp(&[((1, 1), 2), ((1, 2), 1), ((2, 1), 2), ((3, 0), 1)])
        );
        assert_eq!(
            f_polynomial_direct(&tree(Graph::star(3))).unwrap(),
            bp(&[((1, 1), 3), ((1, 3), 1), ((2, 2), 3), ((3, 1), 3), ((4, 0), 1)])
        );
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&part(&[2, 1]), 1, 1, 3), -1);
        assert_eq!(sigma(&part(&[1, 1, 1]), 1, 2, 3), 3);
        for j in 0..=2 {
            assert_eq!(sigma(&part(&[3]), 1, j, 3), 0);
        }
        assert_eq!(sigma(&part(&[1, 1, 1]), 1, 1, 3), 0);
    }

    #[test]
    fn transform_examples() {
        let x = csf_power_sum(&Graph::path(3)).unwrap();
        let f = f_polynomial_from_csf(&x, 3).unwrap();
        assert_eq!(f.coefficient(1, 2), 1);
        assert_eq!(f.coefficient(1, 1), 2);
        assert_eq!(f, f_polynomial_direct(&tree(Graph::path(3))).unwrap());
        let k1 = csf_power_sum(&Graph::empty(1)).unwrap();
        assert_eq!(f_polynomial_from_csf(&k1, 1).unwrap(), bp(&[((1, 0), 1)]));
    }

    #[test]
    fn transform_rejects_non_tree_input() {
        let x = csf_power_sum(&Graph::path(3)).unwrap();
        assert!(matches!(f_polynomial_from_csf(&x, 4), Err(Error::Consistency(_))));
        let mixed = CsfResult {
            poly: &x.poly + &PPolynomial::one(),
            source_order: 3,
        };
        assert!(omega_check(&mixed, 3).is_err());
        // K_4's CSF yields a negative coefficient
        let k4 = csf_power_sum(&Graph::complete(4)).unwrap();
        assert!(matches!(f_polynomial_from_csf(&k4, 4), Err(Error::Consistency(_))));
    }

    #[test]
    fn omega_examples() {
        let x = csf_power_sum(&Graph::path(3)).unwrap();
        assert_eq!(omega_check(&x, 3).unwrap(), f_polynomial_from_csf(&x, 3).unwrap());
        let k2 = csf_power_sum(&Graph::path(2)).unwrap();
        assert_eq!(omega_check(&k2, 2).unwrap(), bp(&[((1, 1), 2), ((2, 0), 1)]));
    }

    #[test]
    fn involution_examples() {
        for n in 2..8 {
            let a = sign_binomial_matrix(1, n, 1);
            assert_eq!(a.get(1, 1), if n % 2 == 0 { 1 } else { -1 });
            assert!(a.mul(&a).is_identity());
        }
        let a = sign_binomial_matrix(2, 5, 1);
        assert_eq!(a.get(1, 1), -1);
        assert_eq!(a.get(2, 1), 3);
        assert_eq!(a.get(2, 2), 1);
        assert_eq!(a.get(1, 2), 0);
        assert!(a.mul(&a).is_identity());
        let a = sign_binomial_matrix(6, 12, 2);
        assert!(a.mul(&a).is_identity());
    }

    #[test]
    fn gds_examples() {
        let g1 = generalized_degree_sequence(&Graph::empty(1)).unwrap();
        assert_eq!(g1, BTreeMap::from([((0, 0, 0), 1), ((1, 0, 0), 1)]));
        let g2 = generalized_degree_sequence(&Graph::path(2)).unwrap();
        assert_eq!(g2, BTreeMap::from([((0, 0, 0), 1), ((1, 0, 1), 2), ((2, 1, 0), 1)]));
        let p3 = generalized_degree_sequence(&Graph::path(3)).unwrap();
        let f = f_polynomial_direct(&tree(Graph::path(3))).unwrap();
        let expected: BTreeMap<(usize, usize), u64> =
            f.terms().map(|((i, j), c)| ((i as usize, j as usize), c as u64)).collect();
        assert_eq!(subtree_slice(&p3), expected);
        assert!(generalized_degree_sequence(&Graph::empty(25)).is_err());
    }
}
