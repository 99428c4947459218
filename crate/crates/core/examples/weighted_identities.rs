//! Vertex-weighted CSFs of a multigraph, checked against deletion-contraction
//! and inclusion-exclusion over an edge set.

use chromsym::csf::{csf_deletion_contraction, csf_weighted, inclusion_exclusion_rhs};
use chromsym::graph::{contract_edges, EdgeSet, Graph, VertexWeighting};

fn main() -> chromsym::Result<()> {
    // a triangle with a doubled edge and a pendant vertex
    let g = Graph::new(4, vec![(0, 1), (0, 1), (1, 2), (2, 0), (2, 3)])?;
    let w = VertexWeighting::new(&g, vec![1, 2, 1, 3])?;
    let x = csf_weighted(&g, &w)?;
    println!("X_(G,w) = {}", x.poly);
    assert_eq!(x, csf_deletion_contraction(&g, &w)?);

    let s = EdgeSet::from_indices([2, 4]);
    assert_eq!(x.poly, inclusion_exclusion_rhs(&g, &w, &s)?);
    println!("inclusion-exclusion over {s} agrees");

    let (h, wh) = contract_edges(&g, &w, &s)?;
    println!("G/S has edges {:?} and weights {:?}", h.edges(), wh.weights());
    println!("X_(G/S) = {}", csf_weighted(&h, &wh)?.poly);

    let looped = Graph::new(2, vec![(0, 1), (1, 1)])?;
    assert!(csf_weighted(&looped, &VertexWeighting::unit(2))?.poly.is_zero());
    println!("a loop makes the CSF vanish");
    Ok(())
}
