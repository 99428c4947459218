//! Subtree polynomial, degree and path counts, trunk and twigs of a tree.
//! Pass an edge list or graph6 file to inspect your own tree.

use chromsym::graph::format::parse_graph;
use chromsym::graph::{Graph, Tree};
use chromsym::invariants::{
    f_polynomial_direct, stats_from_subtree_polynomial, subtree_polynomial,
};

fn main() -> chromsym::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(path) => parse_graph(&std::fs::read_to_string(path)?)?,
        // two branch vertices joined by a path of length 2
        None => Graph::new(
            9,
            vec![(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (5, 6), (2, 7), (7, 8)],
        )?,
    };
    let t = Tree::new(g)?;
    let s = subtree_polynomial(&t)?;
    let stats = stats_from_subtree_polynomial(&s, t.n())?;
    println!("S_T(q, r):\n{s}");
    println!("degree counts d_1..: {:?}", stats.degrees);
    println!("path counts s_1..:   {:?}", stats.paths);
    println!("trunk: {:?}", t.trunk());
    println!("twig lengths: {:?}", t.twig_sequence().lengths());
    println!("F_T(x, y):\n{}", f_polynomial_direct(&t)?);
    Ok(())
}
