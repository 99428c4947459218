//! Single-graph computations returning JSON documents.

use std::str::FromStr;

use serde_json::{json, Value};

use crate::csf::csf_power_sum;
use crate::enumerate::classify;
use crate::error::{Error, Result};
use crate::graph::{Graph, Tree};
use crate::invariants::{
    f_polynomial_direct, f_polynomial_from_csf, stats_from_subtree_polynomial, subtree_polynomial,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum What {
    Csf,
    Invariants,
    Transform,
}

impl FromStr for What {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csf" => Ok(What::Csf),
            "invariants" => Ok(What::Invariants),
            "transform" => Ok(What::Transform),
            _ => Err(Error::Precondition(format!("unknown computation {s:?}"))),
        }
    }
}

fn require_tree(g: &Graph) -> Result<Tree> {
    Tree::new(g.clone())
}

/// Runs one computation. Keys of the returned object are sorted.
pub fn compute(g: &Graph, what: What) -> Result<Value> {
    match what {
        What::Csf => {
            let x = csf_power_sum(g)?;
            Ok(json!({
                "n": g.n(),
                "m": g.m(),
                "csf": x.poly.to_canonical_string().lines().collect::<Vec<_>>(),
            }))
        }
        What::Invariants => {
            let t = require_tree(g)?;
            let s = subtree_polynomial(&t)?;
            let stats = stats_from_subtree_polynomial(&s, t.n())?;
            let twigs = t.twig_sequence();
            Ok(json!({
                "n": t.n(),
                "class": classify(&t).label(),
                "degree_sequence": stats.degrees,
                "path_sequence": stats.paths,
                "twig_sequence": twigs.counts,
                "twig_lengths": twigs.lengths(),
                "trunk_order": t.trunk().len(),
                "subtree_polynomial": s.to_lines(),
                "f_polynomial": f_polynomial_direct(&t)?.to_lines(),
            }))
        }
        What::Transform => {
            let t = require_tree(g)?;
            let x = csf_power_sum(t.graph())?;
            let via_sigma = f_polynomial_from_csf(&x, t.n())?;
            let direct = f_polynomial_direct(&t)?;
            Ok(json!({
                "n": t.n(),
                "f_via_sigma": via_sigma.to_lines(),
                "f_direct": direct.to_lines(),
                "equal": via_sigma == direct,
            }))
        }
    }
}
