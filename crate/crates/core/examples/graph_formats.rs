//! Parses edge lists and graph6, and converts between them.

use chromsym::graph::format::{parse_graph, to_edge_list, to_graph6};
use chromsym::graph::canon::canonical_graph;

fn main() -> chromsym::Result<()> {
    let g = parse_graph("# a 5-cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")?;
    println!("graph6: {}", to_graph6(&g)?);
    let h = parse_graph(">>graph6<<DQc")?;
    print!("edge list:\n{}", to_edge_list(&h));
    println!("canonical relabeling: {:?}", canonical_graph(&h).edges());
    match parse_graph("3 2\n0 1\n1 7\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
