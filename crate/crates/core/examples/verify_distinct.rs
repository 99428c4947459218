//! Checks that trees up to a given order (default 12) have distinct CSFs
//! and writes per-order JSON reports plus a CSV summary.

use chromsym::verify::{verify_distinct, write_reports, VerifyConfig, CSV_HEADER};

fn main() -> chromsym::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let reports = verify_distinct(&VerifyConfig { max_n, jobs })?;
    println!("{CSV_HEADER}");
    for r in &reports {
        println!("{}", r.csv_row());
    }
    let dir = std::env::temp_dir().join("chromsym-verify");
    write_reports(&dir, &reports)?;
    println!("reports in {}", dir.display());
    Ok(())
}
