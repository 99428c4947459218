//! Counts free trees by order and class, and prints the spiders on 6
//! vertices in graph6.

use std::collections::BTreeMap;

use chromsym::enumerate::{canonical_certificate, classify, enumerate_trees, TreeClass};
use chromsym::graph::format::to_graph6;

fn main() -> chromsym::Result<()> {
    for n in 1..=14 {
        let mut by_class: BTreeMap<&str, usize> = BTreeMap::new();
        let mut total = 0;
        for t in enumerate_trees(n)? {
            *by_class.entry(classify(&t).label()).or_default() += 1;
            total += 1;
        }
        println!("n = {n:>2}: {total:>5} trees {by_class:?}");
    }
    for t in enumerate_trees(6)?.filter(|t| classify(t) == TreeClass::Spider) {
        println!("{}  {}", to_graph6(t.graph())?, canonical_certificate(&t));
    }
    Ok(())
}
