//! Searches unicyclic graphs for non-isomorphic pairs sharing a CSF.

use chromsym::verify::{find_collisions, CollisionClass};

fn main() -> chromsym::Result<()> {
    for n in 3..=8 {
        let pairs = find_collisions(CollisionClass::Unicyclic, n)?;
        println!("n = {n}: {} pair(s)", pairs.len());
        if n == 6 {
            for p in &pairs {
                println!("  {} ~ {}", p.left_graph6, p.right_graph6);
                println!("  X = {}", p.csf);
            }
        }
    }
    Ok(())
}
