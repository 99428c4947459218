//! The cross-route identity suite. Each check returns the number of cases
//! examined and, on failure, the first counterexample (graph6 when the graph
//! is simple, an inline edge list otherwise).

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::corpus;
use crate::csf::{
    corollary_difference, csf_deletion_contraction, csf_forest, csf_power_sum, csf_weighted,
    forest_level_sum, inclusion_exclusion_rhs, subtree_derivative,
};
use crate::enumerate::{canonical_certificate, enumerate_trees};
use crate::error::Result;
use crate::graph::format::to_graph6;
use crate::graph::{EdgeSet, Forest, Graph, Tree, VertexWeighting};
use crate::invariants::{
    f_polynomial_direct, f_polynomial_from_csf_with, generalized_degree_sequence, sigma,
    sign_binomial_matrix, stats_from_subtree_polynomial, subtree_polynomial, subtree_slice,
    OmegaKernel, SigmaFn,
};

/// Scales and seeds of the identity suite.
#[derive(Clone, Debug)]
pub struct SelftestConfig {
    /// Trees for route equality, derivative identity, and the projection.
    pub small_tree_order: usize,
    /// Trees for the transform, scalar-product route, and subtree statistics.
    pub tree_order: usize,
    pub random_graphs: usize,
    pub random_forests: usize,
    pub random_triples: usize,
    pub involution_order: usize,
    pub relabelings: usize,
    pub seed: u64,
    pub kernel: SigmaFn,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self {
            small_tree_order: 10,
            tree_order: 12,
            random_graphs: 200,
            random_forests: 100,
            random_triples: 100,
            involution_order: 16,
            relabelings: 10,
            seed: 0x5eed,
            kernel: sigma,
        }
    }
}

impl SelftestConfig {
    /// Everything restricted to the single-vertex tree.
    pub fn trivial() -> Self {
        Self {
            small_tree_order: 1,
            tree_order: 1,
            random_graphs: 0,
            random_forests: 0,
            random_triples: 0,
            involution_order: 1,
            relabelings: 1,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub counterexample: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<Failure>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn summary_line(&self) -> String {
        match &self.failure {
            None => format!("PASS {} ({} cases)", self.name, self.cases),
            Some(f) => format!(
                "FAIL {} after {} cases: {} [counterexample {}]",
                self.name, self.cases, f.detail, f.counterexample
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub checks: Vec<CheckResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

/// Graph6 for simple graphs, `n:u-v,u-v,…` otherwise.
pub fn describe_graph(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| {
        let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("{}:{}", g.n(), edges.join(","))
    })
}

struct Check {
    name: &'static str,
    cases: usize,
    failure: Option<Failure>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failure: None,
        }
    }

    /// Records one case; returns false once a failure is recorded.
    fn case(&mut self, g: &Graph, outcome: Result<Option<String>>) -> bool {
        self.cases += 1;
        let detail = match outcome {
            Ok(None) => return true,
            Ok(Some(d)) => d,
            Err(e) => e.to_string(),
        };
        self.failure = Some(Failure {
            counterexample: describe_graph(g),
            detail,
        });
        false
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            failure: self.failure,
        }
    }
}

fn trees_up_to(max_n: usize) -> impl Iterator<Item = Tree> {
    (1..=max_n).flat_map(|n| enumerate_trees(n).expect("order within cap"))
}

fn mismatch(what: &str) -> Option<String> {
    Some(format!("{what} differ"))
}

/// Edge-subset expansion = deletion–contraction = forest product on every
/// tree, and the first two agree on random weighted multigraphs.
pub fn check_route_equality(max_tree_n: usize, random_graphs: usize, seed: u64) -> CheckResult {
    let mut check = Check::new("route-equality");
    for t in trees_up_to(max_tree_n) {
        let g = t.graph();
        let outcome = (|| {
            let a = csf_power_sum(g)?;
            let b = csf_deletion_contraction(g, &VertexWeighting::unit(g.n()))?;
            let c = csf_forest(&t.as_forest())?;
            Ok((a != b || a != c).then(|| "power-sum, deletion-contraction and forest routes".to_string()))
        })();
        if !check.case(g, outcome) {
            return check.finish();
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_graphs {
        let (g, w) = corpus::random_weighted_multigraph(&mut rng, 7, 10, 4);
        let outcome = (|| {
            let a = csf_weighted(&g, &w)?;
            let b = csf_deletion_contraction(&g, &w)?;
            let looped_nonzero = g.has_loop() && !a.poly.is_zero();
            let inhomogeneous = !a.poly.is_homogeneous_of_degree(w.total());
            Ok(if a != b {
                mismatch("weighted expansion and deletion-contraction")
            } else if looped_nonzero {
                Some("graph with a loop has nonzero CSF".into())
            } else if inhomogeneous {
                Some("CSF not homogeneous of degree w(V)".into())
            } else {
                None
            })
        })();
        if !check.case(&g, outcome) {
            break;
        }
    }
    check.finish()
}

/// `∂X_T/∂p_j = (−1)^{j−1} Σ_H X_{T−V(H)}` for every tree and every `j`.
pub fn check_derivative_identity(max_tree_n: usize) -> CheckResult {
    let mut check = Check::new("subtree-derivative");
    for t in trees_up_to(max_tree_n) {
        let g = t.graph();
        let outcome = (|| {
            let x = csf_power_sum(g)?.poly;
            let f = t.as_forest();
            for j in 1..=g.n() as u32 {
                if x.partial_derivative(j) != subtree_derivative(&f, j)? {
                    return Ok(Some(format!("derivative by p_{j}")));
                }
            }
            Ok(None)
        })();
        if !check.case(g, outcome) {
            break;
        }
    }
    check.finish()
}

/// `Σ_{l(λ)=k} c_λ(F) = (−1)^{n−k} C(n−j, k−j)` on random forests.
pub fn check_level_sums(forests: usize, max_n: usize, seed: u64) -> CheckResult {
    let mut check = Check::new("forest-level-sums");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..forests {
        let f = corpus::random_forest(&mut rng, max_n);
        let outcome = (|| {
            let x = csf_power_sum(f.graph())?;
            let n = f.n();
            let j = f.graph().connected_components().len();
            for k in 0..=n {
                if x.level_sum(k) != forest_level_sum(n, j, k) {
                    return Ok(Some(format!("level {k} with n = {n}, j = {j}")));
                }
            }
            Ok(None)
        })();
        if !check.case(f.graph(), outcome) {
            break;
        }
    }
    check.finish()
}

/// Inclusion–exclusion over a nonempty edge set reproduces `X_{(G,w)}`.
pub fn check_inclusion_exclusion(triples: usize, max_n: usize, seed: u64) -> CheckResult {
    let mut check = Check::new("inclusion-exclusion");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < triples {
        let (g, w) = corpus::random_weighted_multigraph(&mut rng, max_n, 9, 4);
        if g.m() == 0 {
            continue;
        }
        done += 1;
        let s = corpus::random_edge_subset(&mut rng, g.m(), 5);
        let outcome = (|| {
            let lhs = csf_weighted(&g, &w)?.poly;
            let rhs = inclusion_exclusion_rhs(&g, &w, &s)?;
            Ok((lhs != rhs).then(|| format!("S = {s}")))
        })();
        if !check.case(&g, outcome) {
            break;
        }
    }
    check.finish()
}

/// Instances of the contraction-difference identity: identical graphs, the
/// triangle move, and two-branch trees with a one-edge trunk whose twig
/// multisets agree but are split differently between the branch vertices.
pub fn corollary_instances() -> Vec<(Graph, EdgeSet, Graph, EdgeSet)> {
    let h_tree = Graph::new(6, vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).expect("valid");
    let h_relabelled = Graph::new(6, vec![(4, 5), (5, 0), (5, 1), (4, 2), (4, 3)]).expect("valid");
    // u = 0, v1 = 1, v2 = 2; H = G − uv1 + v1v2, S = T = {uv2}
    let g_move = Graph::new(6, vec![(0, 1), (0, 2), (2, 3), (1, 4), (0, 5)]).expect("valid");
    let h_move = Graph::new(6, vec![(1, 2), (0, 2), (2, 3), (1, 4), (0, 5)]).expect("valid");
    // trunk edge 0-1; twigs {1,1} at 0 and {2,2} at 1, versus {1,2} at each end
    let t = Graph::new(
        8,
        vec![(0, 1), (0, 2), (0, 3), (1, 4), (4, 5), (1, 6), (6, 7)],
    )
    .expect("valid");
    let f = Graph::new(
        8,
        vec![(0, 1), (0, 2), (0, 3), (3, 4), (1, 5), (1, 6), (6, 7)],
    )
    .expect("valid");
    let first = EdgeSet::from_indices([0]);
    vec![
        (h_tree.clone(), first, h_tree, first),
        (
            Graph::new(6, vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).expect("valid"),
            first,
            h_relabelled,
            EdgeSet::from_indices([0]),
        ),
        (g_move, EdgeSet::from_indices([1]), h_move, EdgeSet::from_indices([1])),
        (t, first, f, first),
    ]
}

pub fn check_corollary_instances() -> CheckResult {
    let mut check = Check::new("contraction-difference");
    for (g, s, h, t) in corollary_instances() {
        let outcome = corollary_difference(&g, &s, &h, &t)
            .map(|(lhs, rhs)| (lhs != rhs).then(|| "X_G - X_H and deletion sums".to_string()));
        if !check.case(&g, outcome) {
            break;
        }
    }
    check.finish()
}

/// The explicit σ-map applied to `X_T` reproduces `F_T` from direct
/// subtree enumeration.
pub fn check_sigma_transform(max_tree_n: usize, kernel: SigmaFn) -> CheckResult {
    let mut check = Check::new("sigma-transform");
    for t in trees_up_to(max_tree_n) {
        let g = t.graph();
        let outcome = (|| {
            let x = csf_power_sum(g)?.poly;
            let via_sigma = f_polynomial_from_csf_with(&x, g.n(), kernel)?;
            Ok((via_sigma != f_polynomial_direct(&t)?).then(|| mismatch("F_T via sigma and direct F_T")).flatten())
        })();
        if !check.case(g, outcome) {
            break;
        }
    }
    check.finish()
}

/// `⟨Ω_n, X_T⟩` agrees with the σ-map and with direct `F_T`.
pub fn check_omega_route(max_tree_n: usize) -> CheckResult {
    let mut check = Check::new("omega-scalar-product");
    for n in 1..=max_tree_n {
        let kernel = OmegaKernel::new(n);
        for t in enumerate_trees(n).expect("order within cap") {
            let g = t.graph();
            let outcome = (|| {
                let x = csf_power_sum(g)?.poly;
                let via_omega = kernel.apply(&x)?;
                let via_sigma = f_polynomial_from_csf_with(&x, n, sigma)?;
                Ok((via_omega != via_sigma || via_omega != f_polynomial_direct(&t)?)
                    .then(|| "scalar-product route".to_string()))
            })();
            if !check.case(g, outcome) {
                return check.finish();
            }
        }
    }
    check.finish()
}

/// `A_{k,k}² = I` for all `1 ≤ i < n ≤ max_n`, `1 ≤ k ≤ n − i`.
pub fn check_involution(max_n: usize) -> CheckResult {
    let mut check = Check::new("sign-binomial-involution");
    for n in 2..=max_n {
        for i in 1..n {
            for k in 1..=(n - i) {
                let a = sign_binomial_matrix(k, n, i);
                let outcome = Ok((!a.mul(&a).is_identity()).then(|| format!("k = {k}, n = {n}, i = {i}")));
                if !check.case(&Graph::empty(0), outcome) {
                    return check.finish();
                }
            }
        }
    }
    check.finish()
}

/// Degree (`i ≥ 2`) and path counts read from `S_T` match direct counts.
pub fn check_subtree_stats(max_tree_n: usize) -> CheckResult {
    let mut check = Check::new("subtree-polynomial-stats");
    for t in trees_up_to(max_tree_n) {
        let g = t.graph();
        let outcome = (|| {
            let s = subtree_polynomial(&t)?;
            let stats = stats_from_subtree_polynomial(&s, g.n())?;
            let direct_deg = g.degree_sequence();
            if stats.degrees.iter().skip(1).ne(direct_deg.iter().skip(1)) {
                return Ok(mismatch("degree counts (i >= 2)"));
            }
            if stats.degrees != direct_deg {
                return Ok(mismatch("leaf count by complement"));
            }
            if stats.paths != t.as_forest().path_sequence() {
                return Ok(mismatch("path counts"));
            }
            let subtrees = t.enumerate_subtrees()?.len() as i64;
            if s.sum_of_coefficients() != subtrees
                || f_polynomial_direct(&t)?.sum_of_coefficients() != subtrees
            {
                return Ok(mismatch("subtree totals"));
            }
            Ok(None)
        })();
        if !check.case(g, outcome) {
            break;
        }
    }
    check.finish()
}

/// Trunk order and twig sequence are unchanged by random relabelings.
pub fn check_trunk_twig_relabeling(max_tree_n: usize, relabelings: usize, seed: u64) -> CheckResult {
    let mut check = Check::new("trunk-twig-relabeling");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in trees_up_to(max_tree_n) {
        let trunk = t.trunk().len();
        let twigs = t.twig_sequence();
        let cert = canonical_certificate(&t);
        for _ in 0..relabelings {
            let g = corpus::shuffle_labels(&mut rng, t.graph());
            let outcome = Tree::new(g.clone()).map(|u| {
                if canonical_certificate(&u) != cert {
                    mismatch("certificates of relabelings")
                } else if u.trunk().len() != trunk || u.twig_sequence() != twigs {
                    mismatch("trunk order or twig sequence under relabeling")
                } else {
                    None
                }
            });
            if !check.case(&g, outcome) {
                return check.finish();
            }
        }
    }
    check.finish()
}

/// The `e(W) = |W| − 1` slice of the generalized degree sequence is the
/// exponent multiset of `F_T`.
pub fn check_gds_projection(max_tree_n: usize) -> CheckResult {
    let mut check = Check::new("generalized-degree-projection");
    for t in trees_up_to(max_tree_n) {
        let g = t.graph();
        let outcome = (|| {
            let slice = subtree_slice(&generalized_degree_sequence(g)?);
            let f: BTreeMap<(usize, usize), u64> = f_polynomial_direct(&t)?
                .terms()
                .map(|((i, j), c)| ((i as usize, j as usize), c as u64))
                .collect();
            Ok((slice != f).then(|| "projection and F_T".to_string()))
        })();
        if !check.case(g, outcome) {
            break;
        }
    }
    check.finish()
}

/// Derivative identity on random forests (several components).
pub fn check_forest_derivatives(forests: usize, max_n: usize, seed: u64) -> CheckResult {
    let mut check = Check::new("forest-derivative");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..forests {
        let f: Forest = corpus::random_forest(&mut rng, max_n);
        let outcome = (|| {
            let x = csf_forest(&f)?.poly;
            for j in 1..=f.n() as u32 {
                if x.partial_derivative(j) != subtree_derivative(&f, j)? {
                    return Ok(Some(format!("derivative by p_{j}")));
                }
            }
            Ok(None)
        })();
        if !check.case(f.graph(), outcome) {
            break;
        }
    }
    check.finish()
}

/// Runs every identity at the configured scales.
pub fn run(config: &SelftestConfig) -> SelftestReport {
    let seed = config.seed;
    let checks = vec![
        check_route_equality(config.small_tree_order, config.random_graphs, seed),
        check_derivative_identity(config.small_tree_order),
        check_forest_derivatives(config.random_forests.min(30), config.small_tree_order, seed ^ 1),
        check_level_sums(config.random_forests, config.tree_order, seed ^ 2),
        check_inclusion_exclusion(config.random_triples, 7, seed ^ 3),
        check_corollary_instances(),
        check_sigma_transform(config.tree_order, config.kernel),
        check_omega_route(config.tree_order),
        check_involution(config.involution_order),
        check_subtree_stats(config.tree_order),
        check_trunk_twig_relabeling(config.tree_order, config.relabelings, seed ^ 4),
        check_gds_projection(config.small_tree_order),
    ];
    SelftestReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::Partition;

    fn flipped_sigma(lambda: &Partition, i: u32, j: u32, n: u32) -> i64 {
        -sigma(lambda, i, j, n)
    }

    #[test]
    fn trivial_corpus_passes() {
        let report = run(&SelftestConfig::trivial());
        assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn corrupted_sigma_is_caught() {
        let r = check_sigma_transform(4, flipped_sigma);
        let failure = r.failure.expect("fault must be detected");
        assert_eq!(r.name, "sigma-transform");
        // the first tree (K_1) already fails; its graph6 is "@"
        assert_eq!(failure.counterexample, "@");
    }

    #[test]
    fn corollary_instances_hold() {
        assert!(check_corollary_instances().passed());
    }

    #[test]
    fn describe_non_simple() {
        let g = Graph::new(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(describe_graph(&g), "2:0-0,0-1");
        assert_eq!(describe_graph(&Graph::path(2)), "A_");
    }
}
