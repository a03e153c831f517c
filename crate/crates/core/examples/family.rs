// An unbounded family of smooth complete fans over non-polytopal spheres:
// repeated subdivision of the smooth refinement, and its suspension.
//
// cargo run --example family -- 5

use toricfan::subdivision::SubdivisionError;
use toricfan::{desingularize_barnette, generate_family, suspend_fan, underlying_complex};

pub fn run_example(count: usize) -> Result<Vec<usize>, SubdivisionError> {
    let (base, _) = desingularize_barnette();
    let members = generate_family(&base, count)?;
    let mut sizes = Vec::new();
    for (i, f) in members.iter().enumerate() {
        let smooth = f.smoothness_report().smooth;
        let complete = f.is_complete()?;
        println!("member {}: {} rays, {} cones, f {}, smooth {smooth}, complete {complete}", i + 1, f.rays().len(), f.cones().len(), underlying_complex(f).f_vector());
        sizes.push(f.cones().len());
    }
    let s = suspend_fan(&base);
    println!(
        "suspension: dimension {}, {} rays, {} cones, smooth {}, complete {}",
        s.ambient_dim(),
        s.rays().len(),
        s.cones().len(),
        s.smoothness_report().smooth,
        s.is_complete()?
    );
    Ok(sizes)
}

#[allow(dead_code)]
fn main() -> Result<(), SubdivisionError> {
    let count = std::env::args().nth(1).map_or(5, |s| s.parse().expect("count must be an integer"));
    run_example(count).map(|_| ())
}
