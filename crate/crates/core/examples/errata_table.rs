//! Corrected versus original recipe, as CSV on stdout.
//!
//!     cargo run --example errata_table -- 30 > errata.csv

use cfperiod::corollary::errata_table;
use cfperiod::output::write_errata_csv;

fn main() {
    let k_max: usize = std::env::args()
        .nth(1)
        .map_or(20, |k| k.parse().expect("k_max"));
    let rows = errata_table(k_max);
    write_errata_csv(std::io::stdout().lock(), &rows).unwrap();

    let failures: Vec<usize> = rows
        .iter()
        .filter(|r| !r.original_odd)
        .map(|r| r.k)
        .collect();
    eprintln!("original recipe gives an even Q_(k-1) for k in {failures:?}");
    eprintln!(
        "corrected recipe always odd: {}",
        rows.iter().all(|r| r.corrected_odd)
    );
}
