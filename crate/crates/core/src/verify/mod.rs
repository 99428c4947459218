//! Exhaustive distinctness runs, collision search, and report persistence.

mod hash;
pub mod selftest;

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use hash::{fnv1a_128, Fnv1a128};

use crate::csf::csf_power_sum;
use crate::enumerate::{
    canonical_certificate, enumerate_trees, enumerate_unicyclic, graph_certificate, Certificate,
};
use crate::error::{Error, Result};
use crate::graph::format::to_graph6;
use crate::symfunc::PPolynomial;

/// Largest order accepted by [`verify_distinct`].
pub const MAX_VERIFY_ORDER: usize = 20;
/// Order range accepted by [`find_collisions`].
pub const COLLIDE_ORDERS: std::ops::RangeInclusive<usize> = 3..=8;

const CHUNK: usize = 2048;

/// Parameters of a distinctness run, echoed into every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollisionRecord {
    pub left: String,
    pub right: String,
}

/// Outcome of checking every tree of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub order: usize,
    pub class: String,
    pub tree_count: usize,
    pub distinct_csf_count: usize,
    pub collisions: Vec<CollisionRecord>,
    pub elapsed_ms: u64,
    pub config: VerifyConfig,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.collisions.is_empty()
    }

    /// JSON with keys sorted.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.order,
            self.tree_count,
            self.distinct_csf_count,
            self.collisions.len(),
            self.elapsed_ms
        )
    }
}

pub const CSV_HEADER: &str = "n,trees,distinct,collisions,ms";

struct Seen {
    certificate: Certificate,
    csf_text: String,
}

/// Computes `X_T` for every tree of each order `1..=max_n` and checks that
/// no two coincide.
///
/// Trees are streamed in chunks; each chunk's CSFs are computed on a pool of
/// `jobs` workers and then reduced in enumeration order. Only the 128-bit
/// hash of each canonical serialization, the first certificate, and the
/// serialization are retained. Equal hashes are confirmed by parsing both
/// serializations and comparing the polynomials exactly; a hash match that
/// is not an exact match just shares the bucket.
pub fn verify_distinct(config: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    if config.max_n == 0 || config.max_n > MAX_VERIFY_ORDER {
        return Err(Error::Capacity {
            what: "verification order",
            got: config.max_n,
            limit: MAX_VERIFY_ORDER,
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    (1..=config.max_n)
        .map(|n| verify_order(n, config, &pool))
        .collect()
}

fn verify_order(
    n: usize,
    config: &VerifyConfig,
    pool: &rayon::ThreadPool,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut table: HashMap<u128, Vec<Seen>> = HashMap::new();
    let mut collisions = Vec::new();
    let mut tree_count = 0;
    let mut distinct = 0;
    let mut trees = enumerate_trees(n)?;
    loop {
        let chunk: Vec<_> = trees.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let computed: Vec<Result<(Certificate, String, u128)>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|t| {
                    let text = csf_power_sum(t.graph())?.poly.to_canonical_string();
                    let digest = fnv1a_128(text.as_bytes());
                    Ok((canonical_certificate(t), text, digest))
                })
                .collect()
        });
        for item in computed {
            let (certificate, csf_text, digest) = item?;
            tree_count += 1;
            let bucket = table.entry(digest).or_default();
            let mut matched = None;
            for seen in bucket.iter() {
                if exactly_equal(&seen.csf_text, &csf_text)? {
                    matched = Some(seen.certificate.clone());
                    break;
                }
            }
            match matched {
                Some(first) => {
                    if first == certificate {
                        return Err(Error::Consistency(format!(
                            "tree enumeration produced a duplicate at n = {n}"
                        )));
                    }
                    collisions.push(CollisionRecord {
                        left: first.to_string(),
                        right: certificate.to_string(),
                    });
                }
                None => {
                    distinct += 1;
                    bucket.push(Seen {
                        certificate,
                        csf_text,
                    });
                }
            }
        }
    }
    Ok(VerificationReport {
        order: n,
        class: "trees".into(),
        tree_count,
        distinct_csf_count: distinct,
        collisions,
        elapsed_ms: start.elapsed().as_millis() as u64,
        config: config.clone(),
    })
}

fn exactly_equal(a: &str, b: &str) -> Result<bool> {
    Ok(PPolynomial::parse_canonical(a)? == PPolynomial::parse_canonical(b)?)
}

/// Writes `verify_nNN.json` per order and `summary.csv` into `dir`.
pub fn write_reports(dir: &Path, reports: &[VerificationReport]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for r in reports {
        fs::write(dir.join(format!("verify_n{:02}.json", r.order)), r.to_json() + "\n")?;
        csv.push_str(&r.csv_row());
        csv.push('\n');
    }
    fs::write(dir.join("summary.csv"), csv)?;
    Ok(())
}

/// Graph families searched for CSF collisions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CollisionClass {
    Unicyclic,
}

impl FromStr for CollisionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unicyclic" => Ok(CollisionClass::Unicyclic),
            _ => Err(Error::Precondition(format!("unsupported collision class {s:?}"))),
        }
    }
}

/// Two non-isomorphic graphs with exactly the same CSF.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionPair {
    pub left: Certificate,
    pub right: Certificate,
    pub left_graph6: String,
    pub right_graph6: String,
    pub csf: PPolynomial,
}

/// Every pair of non-isomorphic graphs in the class with equal CSFs, in
/// enumeration order.
pub fn find_collisions(class: CollisionClass, n: usize) -> Result<Vec<CollisionPair>> {
    if !COLLIDE_ORDERS.contains(&n) {
        return Err(Error::Capacity {
            what: "collision search order",
            got: n,
            limit: *COLLIDE_ORDERS.end(),
        });
    }
    let graphs = match class {
        CollisionClass::Unicyclic => enumerate_unicyclic(n)?,
    };
    let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    let mut polys = Vec::with_capacity(graphs.len());
    for (idx, g) in graphs.iter().enumerate() {
        let poly = csf_power_sum(g)?.poly;
        groups.entry(poly.to_canonical_string()).or_default().push(idx);
        polys.push(poly);
    }
    let mut members: Vec<&Vec<usize>> = groups.values().filter(|v| v.len() > 1).collect();
    members.sort_by_key(|v| v[0]);
    let mut out = Vec::new();
    for group in members {
        for (a, &i) in group.iter().enumerate() {
            for &j in &group[a + 1..] {
                debug_assert_eq!(polys[i], polys[j]);
                let (left, right) = (graph_certificate(&graphs[i])?, graph_certificate(&graphs[j])?);
                if left == right {
                    return Err(Error::Consistency("duplicate graph in enumeration".into()));
                }
                out.push(CollisionPair {
                    left,
                    right,
                    left_graph6: to_graph6(&graphs[i])?,
                    right_graph6: to_graph6(&graphs[j])?,
                    csf: polys[i].clone(),
                });
            }
        }
    }
    Ok(out)
}
