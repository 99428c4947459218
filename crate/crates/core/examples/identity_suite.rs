//! Runs the identity suite, then shows how a corrupted σ kernel is caught.

use chromsym::symfunc::Partition;
use chromsym::invariants::sigma;
use chromsym::verify::selftest::{check_sigma_transform, run, SelftestConfig};

fn flipped(lambda: &Partition, i: u32, j: u32, n: u32) -> i64 {
    -sigma(lambda, i, j, n)
}

fn main() {
    let report = run(&SelftestConfig::default());
    for check in &report.checks {
        println!("{}", check.summary_line());
    }
    println!("{}", check_sigma_transform(6, flipped).summary_line());
}
