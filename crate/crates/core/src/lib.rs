//! Chromatic symmetric functions of graphs in the power-sum basis, with
//! tree invariants read off from them and tools for checking that small
//! trees are distinguished.
//!
//! The main entry points are [`csf::csf_power_sum`] and
//! [`csf::csf_weighted`]; the rest of the crate builds on their output.

pub mod compute;
pub mod corpus;
pub mod csf;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};

/// `C(a, b)`, taken to be 0 when `b < 0`, `b > a` or `a < 0`.
pub fn binomial(a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u128;
    let mut acc: u128 = 1;
    for t in 0..b {
        acc = acc * (a as u128 - t) / (t + 1);
    }
    i64::try_from(acc).expect("binomial overflows i64")
}
