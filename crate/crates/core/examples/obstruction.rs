// The combinatorial facts behind the non-polytopality of the smooth
// refinement's underlying sphere: f-vectors, the star and link of e1 d3.
//
// cargo run --example obstruction

use toricfan::complex::{ComplexError, ObstructionReport};
use toricfan::datasets::barnette_fan;
use toricfan::{desingularize_barnette, underlying_complex, verify_barnette_obstruction};

pub fn run_example() -> Result<ObstructionReport, ComplexError> {
    let k = underlying_complex(&barnette_fan());
    let kp = underlying_complex(&desingularize_barnette().0);
    println!("f-vector of the Barnette sphere: {}", k.f_vector());
    println!("f-vector of the refined sphere:  {}", kp.f_vector());
    let r = verify_barnette_obstruction(&kp)?;
    for f in &r.facts {
        println!("[{}] {}: {}", if f.passed { "pass" } else { "FAIL" }, f.name, f.witness);
    }
    for d in &r.star_discrepancies {
        println!("note: {d}");
    }
    Ok(r)
}

#[allow(dead_code)]
fn main() -> Result<(), ComplexError> {
    run_example().map(|_| ())
}
