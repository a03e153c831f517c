mod verify_barnette {
    include!("../examples/verify_barnette.rs");
}
mod lattice_scan {
    include!("../examples/lattice_scan.rs");
}
mod desingularize {
    include!("../examples/desingularize.rs");
}
mod obstruction {
    include!("../examples/obstruction.rs");
}
mod family {
    include!("../examples/family.rs");
}
mod certify {
    include!("../examples/certify.rs");
}

#[test]
fn verify_example() {
    let s = verify_barnette::run_example().unwrap();
    let names: Vec<&str> = s.singular.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, ["sigma13", "sigma15", "sigma17", "sigma18", "sigma19"]);
    assert_eq!(s.singular[3].1, -9);
    assert_eq!(s.facets, [38, 110]);
    assert_eq!(s.complete, [true, true]);
}

#[test]
fn scan_example() {
    let r = lattice_scan::run_example(4).unwrap();
    assert!(r.sum_check());
    assert_eq!(r.counts_by_face_dim[0], 1);
    // rays with an entry of size 2 reach the box boundary at multiple 2
    assert_eq!(r.counts_by_face_dim[1], 5 * 4 + 3 * 2);
}

#[test]
fn desingularize_example() {
    let fan = desingularize::run_example();
    assert_eq!(fan.cones().len(), 55);
    assert!(fan.smoothness_report().smooth);
}

#[test]
fn obstruction_example() {
    assert!(obstruction::run_example().unwrap().verdict);
}

#[test]
fn family_example() {
    assert_eq!(family::run_example(3).unwrap(), [58, 61, 64]);
}

#[test]
fn certify_example() {
    assert_eq!(certify::run_example().unwrap(), (true, false));
}
