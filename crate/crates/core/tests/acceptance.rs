//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the PASS/FAIL lines always print; exits non-zero on failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{cross_polytope, oracle_scan, simplex_boundary};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toricfan::complex::EXPECTED_LINK_E1D3;
use toricfan::datasets::*;
use toricfan::subdivision::desingularization_stages;
use toricfan::*;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn det_in_order(fan: &Fan, labels: &[&str]) -> BigInt {
    let cols = labels.iter().map(|l| fan.rays()[fan.ray_index(l).expect("label")].vector.clone()).collect();
    SquareMatrix::from_columns(cols).unwrap().determinant()
}

fn sorted_set(labels: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

fn ac1() -> Check {
    let fan = barnette_fan();
    for (name, labels, det) in BARNETTE_CONES {
        let got = det_in_order(&fan, &labels);
        ensure(got == BigInt::from(det), format!("{name}: {got} != {det}"))?;
    }
    Ok("19 determinants match".into())
}

fn ac2() -> Check {
    let mut parts = Vec::new();
    for (fan, facets) in [(barnette_fan(), 38), (desingularize_barnette().0, 110)] {
        let r = fan.verify_completeness(&IntVector::from_i64(&[1, 1, 1, 1])).map_err(|e| e.to_string())?;
        ensure(r.verdict && r.all_facets_paired && r.all_pairs_opposite, "completeness failed")?;
        ensure(r.facet_count == facets, format!("{} facets, expected {facets}", r.facet_count))?;
        ensure(r.witness_multiplicity == 1, "witness multiplicity")?;
        parts.push(format!("{} facets", r.facet_count));
    }
    Ok(format!("both complete ({})", parts.join(", ")))
}

fn ac3() -> Check {
    let r = scan_box(&barnette_fan(), BARNETTE_SCAN_BOUND, true).map_err(|e| e.to_string())?;
    ensure(r.counts_descending() == BARNETTE_SCAN_COUNTS, format!("counts {:?}", r.counts_descending()))?;
    ensure(r.not_covered == 0, "uncovered points")?;
    ensure(r.total() == 43_046_721, "sum")?;
    ensure(r.one_face_points.as_deref() == Some(&barnette_one_face_points()[..]), "one-face points differ")?;
    Ok(format!("{:?}, sum {}", r.counts_descending(), r.total()))
}

fn ac4() -> Check {
    let (fan, _) = desingularize_barnette();
    ensure(fan.rays().len() == 18 && fan.cones().len() == 55, "shape")?;
    let got: BTreeSet<Vec<String>> = (0..55).map(|c| sorted_set(&fan.cone_labels(c))).collect();
    let mut expected = BTreeSet::new();
    for (name, labels, det) in BARNETTE_CONES {
        if !BARNETTE_SINGULAR.contains(&name) {
            ensure(det.abs() == 1, format!("{name} is a survivor"))?;
            expected.insert(sorted_set(&labels));
        }
    }
    ensure(expected.len() == 14, "14 survivors")?;
    for (labels, sign) in DESINGULARIZED_CONES {
        expected.insert(sorted_set(&labels));
        let d = det_in_order(&fan, &labels);
        ensure(d == BigInt::from(sign), format!("{} has det {d}, expected {sign}", labels.concat()))?;
    }
    ensure(got == expected, "cone set differs from survivors plus the 41 new cones")?;
    ensure(fan.smoothness_report().smooth, "not smooth")?;
    ensure(refines(&fan, &barnette_fan()).map_err(|e| e.to_string())?, "does not refine")?;

    let stages = desingularization_stages();
    let count = |f: &Fan, v: i64| (0..f.cones().len()).filter(|&c| f.cone_determinant(c) == BigInt::from(v)).count();
    let stage = |l: &str| stages.iter().find(|s| s.step.new_ray_label == l).unwrap();
    ensure(count(&stage("c4").fan, -3) == 3, "three cones at -3 after c4")?;
    let after_c2 = &stage("c2").fan;
    for cone in [["d3", "d2", "c2", "d4"], ["d3", "d2", "e3", "c2"]] {
        after_c2.find_cone(&cone).map_err(|e| e.to_string())?;
        ensure(det_in_order(after_c2, &cone) == BigInt::from(2), format!("{} after c2", cone.concat()))?;
    }
    ensure(count(&stage("c9").fan, -2) == 6, "six cones at -2 after c5, c7, c9")?;
    Ok("18 rays, 55 cones, 14 + 41 with listed signs, intermediates match".into())
}

fn ac5() -> Check {
    let fan = barnette_fan();
    for c in 0..19 {
        let meets = fan.cone_meets_open_orthant(c).map_err(|e| e.to_string())?;
        ensure(meets == (c == 0), format!("{}: {meets}", fan.cone_name(c)))?;
    }
    Ok("only sigma1 meets the open orthant".into())
}

fn ac6() -> Check {
    let k = underlying_complex(&desingularize_barnette().0);
    let r = verify_barnette_obstruction(&k).map_err(|e| e.to_string())?;
    ensure(r.verdict, format!("{:?}", r.facts))?;
    ensure(r.star_e1d3.len() == 6, "star size")?;
    let link = k.link_of(&["e1", "d3"]).map_err(|e| e.to_string())?;
    let cycle = link.as_cycle().ok_or("link is not a cycle")?;
    ensure(cycle.len() == 6, "cycle length")?;
    for [a, b] in EXPECTED_LINK_E1D3 {
        ensure(link.has_facet(&[a, b]), format!("edge {a}{b}"))?;
    }
    Ok(format!("4 facts pass; link {}; {} discrepancy note(s) on the quoted star", cycle.join("-"), r.star_discrepancies.len()))
}

fn ac7() -> Check {
    let (base, _) = desingularize_barnette();
    let fam = generate_family(&base, 5).map_err(|e| e.to_string())?;
    let counts: Vec<usize> = fam.iter().map(|f| f.cones().len()).collect();
    ensure(counts == [58, 61, 64, 67, 70], format!("{counts:?}"))?;
    for f in &fam {
        ensure(f.smoothness_report().smooth && f.is_complete().map_err(|e| e.to_string())?, "member not smooth complete")?;
    }
    let s = suspend_fan(&base);
    ensure(s.rays().len() == 20 && s.cones().len() == 110, "suspension shape")?;
    ensure(s.smoothness_report().smooth && s.is_complete().map_err(|e| e.to_string())?, "suspension")?;
    let link = underlying_complex(&s).link_of(&["N"]).map_err(|e| e.to_string())?;
    ensure(link.same_labelled(&underlying_complex(&base)), "link of N")?;
    Ok(format!("family {counts:?}; suspension 20 rays / 110 cones, link(N) = K"))
}

fn ac8() -> Check {
    for fan in [barnette_fan(), desingularize_barnette().0] {
        for b in 1..=3 {
            let fast = scan_box(&fan, b, false).map_err(|e| e.to_string())?;
            let (counts, uncovered) = oracle_scan(&fan, b);
            ensure(fast.counts_by_face_dim == counts && fast.not_covered == uncovered, format!("bound {b}"))?;
        }
    }
    Ok("6 scans agree with the per-point oracle".into())
}

fn ac9() -> Check {
    let mut instances = Vec::new();
    let simplex = SimplicialComplex::from_label_facets(&simplex_boundary(4)).unwrap();
    let mut pts = vec![("v0".to_string(), IntVector::zero(4))];
    pts.extend((0..4).map(|i| (format!("v{}", i + 1), IntVector::unit(4, i))));
    instances.push((simplex, Realization::from_int_points(pts.iter().map(|(l, v)| (l.as_str(), v))).unwrap()));
    let (facets, coords) = cross_polytope(4);
    let cross = SimplicialComplex::from_label_facets(&facets).unwrap();
    let pts: Vec<(String, IntVector)> = coords.into_iter().map(|(l, v)| (l, IntVector::from_i64(&v))).collect();
    instances.push((cross, Realization::from_int_points(pts.iter().map(|(l, v)| (l.as_str(), v))).unwrap()));

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (c, r) in &instances {
        ensure(certify_realization(c, r).map_err(|e| e.to_string())?.passed, "known polytope rejected")?;
        for _ in 0..3 {
            let mut m = vec![vec![0i64; 4]; 4];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            for _ in 0..10 {
                let (i, j) = (rng.gen_range(0..4), rng.gen_range(0..4));
                if i != j {
                    let k = rng.gen_range(-2..=2);
                    let src = m[j].clone();
                    for (a, b) in m[i].iter_mut().zip(src) {
                        *a += k * b;
                    }
                }
            }
            let a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
            let b: Vec<BigRational> = (0..4).map(|_| BigRational::from_integer(rng.gen_range(-5..=5).into())).collect();
            ensure(certify_realization(c, &r.transformed(&a, &b)).map_err(|e| e.to_string())?.passed, "not affine invariant")?;
        }
    }
    let (fan, _) = desingularize_barnette();
    let r = Realization::from_int_points(fan.rays().iter().map(|x| (x.label.as_str(), &x.vector))).unwrap();
    let rep = certify_realization(&underlying_complex(&fan), &r).map_err(|e| e.to_string())?;
    ensure(!rep.passed, "ray realization accepted")?;
    let v = rep.first_violation().ok_or("no witness facet")?;
    Ok(format!("simplex and cross-polytope pass; ray realization rejected at facet {}", v.face))
}

fn main() {
    let criteria: [(&str, &str, fn() -> Check, Duration); 9] = [
        ("AC1", "Table of cone determinants", ac1, Duration::from_secs(1)),
        ("AC2", "completeness of both fans", ac2, Duration::from_secs(1)),
        ("AC3", "lattice scan at bound 40", ac3, Duration::from_secs(120)),
        ("AC4", "desingularisation pipeline", ac4, Duration::from_secs(1)),
        ("AC5", "open-orthant test", ac5, Duration::from_secs(1)),
        ("AC6", "combinatorial obstruction facts", ac6, Duration::from_secs(1)),
        ("AC7", "family and suspension", ac7, Duration::from_secs(60)),
        ("AC8", "oracle equivalence", ac8, Duration::from_secs(60)),
        ("AC9", "certificate checker", ac9, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (id, title, check, limit) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(msg) => println!("[PASS] {id} {title}: {msg} ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {msg} ({elapsed:.2?})");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
