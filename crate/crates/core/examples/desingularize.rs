// Replays the ten stellar subdivisions that make the Barnette fan smooth and
// writes the result as JSON.
//
// cargo run --example desingularize -- smooth.json

use toricfan::formats::{FanDocument, Metadata};
use toricfan::subdivision::desingularization_stages;
use toricfan::Fan;

pub fn run_example() -> Fan {
    let stages = desingularization_stages();
    for s in &stages {
        let worst = (0..s.fan.cones().len()).map(|c| s.fan.cone_determinant(c).magnitude().clone()).max().unwrap();
        println!(
            "{:<4} {:<18} face {:<10} replaced {:<18} cones {:>2}  max |det| {}",
            s.step.new_ray_label,
            s.step.new_ray.to_string(),
            s.step.face.concat(),
            s.step.affected_cones.join(","),
            s.fan.cones().len(),
            worst
        );
    }
    stages.into_iter().last().expect("ten stages").fan
}

#[allow(dead_code)]
fn main() -> std::io::Result<()> {
    let fan = run_example();
    let doc = FanDocument::from_fan(&fan, Some(Metadata::named("barnette-smooth", "ten stellar subdivisions")));
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(path, doc.to_canonical_string()),
        None => {
            print!("{}", doc.to_canonical_string());
            Ok(())
        }
    }
}
