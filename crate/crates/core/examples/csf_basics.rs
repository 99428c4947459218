//! CSFs of a few small graphs, printed in the power-sum basis.

use chromsym::csf::{csf_deletion_contraction, csf_power_sum};
use chromsym::graph::{Graph, VertexWeighting};

fn main() -> chromsym::Result<()> {
    let graphs = [
        ("P_3", Graph::path(3)),
        ("K_3", Graph::cycle(3)),
        ("K_{1,3}", Graph::star(3)),
        ("C_4", Graph::cycle(4)),
    ];
    for (name, g) in graphs {
        let x = csf_power_sum(&g)?;
        let dc = csf_deletion_contraction(&g, &VertexWeighting::unit(g.n()))?;
        assert_eq!(x, dc);
        println!("X_{name} = {}", x.poly);
        let levels: Vec<String> = (1..=g.n()).map(|k| x.level_sum(k).to_string()).collect();
        println!("  level sums by length: {}", levels.join(" "));
    }
    Ok(())
}
