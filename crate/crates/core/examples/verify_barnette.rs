// Determinants of the 19 cones of the Barnette fan, and completeness of the
// fan and of its smooth refinement.
//
// cargo run --example verify_barnette

use toricfan::datasets::barnette_fan;
use toricfan::{desingularize_barnette, Fan, FanError};

pub struct Summary {
    pub singular: Vec<(String, i64)>,
    pub facets: [usize; 2],
    pub complete: [bool; 2],
}

pub fn run_example() -> Result<Summary, FanError> {
    let delta = barnette_fan();
    let smooth = desingularize_barnette().0;
    for i in 0..delta.cones().len() {
        println!("{:>8} {:<10} det {:>3}", delta.cone_name(i), delta.cone_word(i), delta.cone_determinant(i));
    }
    let singular = delta
        .smoothness_report()
        .singular()
        .map(|c| (c.name.clone(), i64::try_from(&c.determinant).unwrap()))
        .collect();
    let check = |f: &Fan| f.default_witness().and_then(|w| f.verify_completeness(&w));
    let (a, b) = (check(&delta)?, check(&smooth)?);
    println!("Barnette fan: {} facets, complete {}", a.facet_count, a.verdict);
    println!("smooth refinement: {} facets, complete {}", b.facet_count, b.verdict);
    Ok(Summary { singular, facets: [a.facet_count, b.facet_count], complete: [a.verdict, b.verdict] })
}

#[allow(dead_code)]
fn main() -> Result<(), FanError> {
    run_example().map(|_| ())
}
