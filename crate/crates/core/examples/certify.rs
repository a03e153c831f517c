// Checks candidate convex realizations: the boundary of the 4-simplex
// passes, the refined sphere placed on its own ray vectors does not.
//
// cargo run --example certify

use toricfan::certify::CertError;
use toricfan::{certify_realization, desingularize_barnette, underlying_complex, IntVector, Realization, SimplicialComplex};

pub fn run_example() -> Result<(bool, bool), CertError> {
    let facets: Vec<Vec<String>> =
        (0..5).map(|skip| (0..5).filter(|&i| i != skip).map(|i| format!("v{i}")).collect()).collect();
    let simplex = SimplicialComplex::from_label_facets(&facets).expect("valid complex");
    let mut pts = vec![("v0".to_string(), IntVector::zero(4))];
    pts.extend((0..4).map(|i| (format!("v{}", i + 1), IntVector::unit(4, i))));
    let a = certify_realization(&simplex, &Realization::from_int_points(pts.iter().map(|(l, v)| (l.as_str(), v)))?)?;
    println!("4-simplex: {}", a.verdict);

    let (fan, _) = desingularize_barnette();
    let rays = Realization::from_int_points(fan.rays().iter().map(|r| (r.label.as_str(), &r.vector)))?;
    let b = certify_realization(&underlying_complex(&fan), &rays)?;
    println!("refined sphere on its rays: {}", b.verdict);
    if let Some(v) = b.first_violation() {
        println!("  facet {} has [{}] above, [{}] below, [{}] on its hyperplane", v.face, v.above.join(","), v.below.join(","), v.on.join(","));
    }
    Ok((a.passed, b.passed))
}

#[allow(dead_code)]
fn main() -> Result<(), CertError> {
    run_example().map(|_| ())
}
