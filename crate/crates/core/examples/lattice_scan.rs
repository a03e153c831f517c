// Classifies the lattice points of [-B, B]^4 by the face of the Barnette
// fan containing them. B defaults to 40; pass a smaller bound for a quick run.
//
// cargo run --release --example lattice_scan -- 10

use toricfan::datasets::barnette_fan;
use toricfan::scan::ScanError;
use toricfan::{scan_box, ScanReport};

pub fn run_example(bound: i64) -> Result<ScanReport, ScanError> {
    let report = scan_box(&barnette_fan(), bound, true)?;
    println!("{report}");
    println!("sum check: {}", report.sum_check());
    Ok(report)
}

#[allow(dead_code)]
fn main() -> Result<(), ScanError> {
    let bound = std::env::args().nth(1).map_or(40, |s| s.parse().expect("bound must be an integer"));
    run_example(bound).map(|_| ())
}
