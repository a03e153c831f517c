//! Embedded data: the simplicial fan over the Barnette sphere, the subdivision
//! points used to desingularise it, and golden values for regression checks.
//!
//! Only the singular fan is shipped. The smooth refinement is always
//! recomputed by [`crate::subdivision::desingularize_barnette`].
//!
//! One published description of the fan writes the eighteenth cone as
//! `d1 d2 e3 d4` in running text. The cone table and every cone produced
//! from it are consistent with `d1 d2 d3 e4`, which is what is encoded here.

use crate::fan::Fan;
use crate::linalg::IntVector;

/// Ray labels and vectors of the Barnette fan, in canonical order.
pub const BARNETTE_RAYS: [(&str, [i64; 4]); 8] = [
    ("e1", [1, 0, 0, 0]),
    ("e2", [0, 1, 0, 0]),
    ("e3", [0, 0, 1, 0]),
    ("e4", [0, 0, 0, 1]),
    ("d1", [-1, 0, -2, 1]),
    ("d2", [-2, -1, 0, 1]),
    ("d3", [0, -2, -1, 1]),
    ("d4", [1, 0, 1, -1]),
];

/// The 19 maximal cones `sigma1..sigma19` with their rays in listed order and
/// the determinant of the column matrix in that order.
pub const BARNETTE_CONES: [(&str, [&str; 4], i64); 19] = [
    ("sigma1", ["e1", "e2", "e3", "e4"], 1),
    ("sigma2", ["d1", "e2", "e3", "e4"], -1),
    ("sigma3", ["e1", "d2", "e3", "e4"], -1),
    ("sigma4", ["e1", "e2", "d3", "e4"], -1),
    ("sigma5", ["e1", "e2", "e3", "d4"], -1),
    ("sigma6", ["d1", "d2", "e3", "e4"], 1),
    ("sigma7", ["e1", "d2", "d3", "e4"], 1),
    ("sigma8", ["d1", "e2", "d3", "e4"], 1),
    ("sigma9", ["e1", "d2", "e3", "d3"], 1),
    ("sigma10", ["e1", "e2", "d3", "d1"], 1),
    ("sigma11", ["d1", "e2", "e3", "d2"], 1),
    ("sigma12", ["e1", "e2", "d1", "d4"], 1),
    ("sigma13", ["e1", "d3", "e3", "d4"], 2),
    ("sigma14", ["d2", "e2", "e3", "d4"], 1),
    ("sigma15", ["e1", "d1", "d3", "d4"], 2),
    ("sigma16", ["d1", "e2", "d2", "d4"], 1),
    ("sigma17", ["d3", "d2", "e3", "d4"], 3),
    ("sigma18", ["d1", "d2", "d3", "e4"], -9),
    ("sigma19", ["d1", "d2", "d3", "d4"], 3),
];

/// Names of the singular cones of the Barnette fan.
pub const BARNETTE_SINGULAR: [&str; 5] = ["sigma13", "sigma15", "sigma17", "sigma18", "sigma19"];

/// A subdivision point together with its barycentric description: the rays of
/// the face it lies on and the coefficients `(num, den)` on those rays.
#[derive(Clone, Copy, Debug)]
pub struct SubdivisionPoint {
    pub label: &'static str,
    pub vector: [i64; 4],
    pub face: &'static [&'static str],
    pub coefficients: &'static [(i64, i64)],
}

/// Points `c1..c10` in the order they are inserted.
pub const DESINGULARIZATION_POINTS: [SubdivisionPoint; 10] = [
    SubdivisionPoint {
        label: "c1",
        vector: [1, -1, 0, 0],
        face: &["e1", "d3", "d4"],
        coefficients: &[(1, 2), (1, 2), (1, 2)],
    },
    SubdivisionPoint {
        label: "c2",
        vector: [0, -1, 1, 0],
        face: &["d3", "d2", "e3", "d4"],
        coefficients: &[(1, 3), (1, 3), (2, 3), (2, 3)],
    },
    SubdivisionPoint {
        label: "c3",
        vector: [-1, -2, 0, 1],
        face: &["d3", "d2", "c2"],
        coefficients: &[(1, 2), (1, 2), (1, 2)],
    },
    SubdivisionPoint {
        label: "c4",
        vector: [-1, -1, -1, 1],
        face: &["d1", "d2", "d3"],
        coefficients: &[(1, 3), (1, 3), (1, 3)],
    },
    SubdivisionPoint {
        label: "c5",
        vector: [-1, -2, -1, 2],
        face: &["c4", "d2", "d3", "e4"],
        coefficients: &[(1, 3), (1, 3), (2, 3), (2, 3)],
    },
    SubdivisionPoint {
        label: "c7",
        vector: [-1, -1, -2, 2],
        face: &["d1", "c4", "d3", "e4"],
        coefficients: &[(2, 3), (1, 3), (1, 3), (2, 3)],
    },
    SubdivisionPoint {
        label: "c9",
        vector: [-2, -1, -1, 2],
        face: &["d1", "d2", "c4", "e4"],
        coefficients: &[(1, 3), (2, 3), (1, 3), (2, 3)],
    },
    SubdivisionPoint {
        label: "c6",
        vector: [-2, -2, -1, 2],
        face: &["c4", "d2", "c5"],
        coefficients: &[(1, 2), (1, 2), (1, 2)],
    },
    SubdivisionPoint {
        label: "c8",
        vector: [-1, -2, -2, 2],
        face: &["c7", "c4", "d3"],
        coefficients: &[(1, 2), (1, 2), (1, 2)],
    },
    SubdivisionPoint {
        label: "c10",
        vector: [-2, -1, -2, 2],
        face: &["d1", "c9", "c4"],
        coefficients: &[(1, 2), (1, 2), (1, 2)],
    },
];

/// The 41 cones that replace the singular cones, with the sign of their
/// determinant in listed order.
pub const DESINGULARIZED_CONES: [([&str; 4], i8); 41] = [
    (["c1", "d3", "e3", "d4"], 1),
    (["e1", "c1", "e3", "d4"], 1),
    (["e1", "d3", "e3", "c1"], 1),
    (["c1", "d1", "d3", "d4"], 1),
    (["e1", "d1", "c1", "d4"], 1),
    (["e1", "d1", "d3", "c1"], 1),
    (["c2", "d2", "e3", "d4"], 1),
    (["d3", "c2", "e3", "d4"], 1),
    (["c3", "d2", "c2", "d4"], 1),
    (["d3", "c3", "c2", "d4"], 1),
    (["d3", "d2", "c3", "d4"], 1),
    (["c3", "d2", "e3", "c2"], 1),
    (["d3", "c3", "e3", "c2"], 1),
    (["d3", "d2", "e3", "c3"], 1),
    (["c5", "d2", "d3", "e4"], -1),
    (["c4", "c5", "d3", "e4"], -1),
    (["c6", "d2", "c5", "e4"], -1),
    (["c4", "c6", "c5", "e4"], -1),
    (["c4", "d2", "c6", "e4"], -1),
    (["c6", "d2", "d3", "c5"], -1),
    (["c4", "c6", "d3", "c5"], -1),
    (["c4", "d2", "d3", "c6"], -1),
    (["c8", "c4", "d3", "e4"], -1),
    (["c7", "c8", "d3", "e4"], -1),
    (["c7", "c4", "c8", "e4"], -1),
    (["d1", "c7", "d3", "e4"], -1),
    (["d1", "c4", "c7", "e4"], -1),
    (["d1", "c8", "d3", "c7"], -1),
    (["d1", "c4", "c8", "c7"], -1),
    (["d1", "c4", "d3", "c8"], -1),
    (["c9", "d2", "c4", "e4"], -1),
    (["c10", "c9", "c4", "e4"], -1),
    (["d1", "c10", "c4", "e4"], -1),
    (["d1", "c9", "c10", "e4"], -1),
    (["d1", "d2", "c9", "e4"], -1),
    (["c10", "d2", "c4", "c9"], -1),
    (["d1", "d2", "c10", "c9"], -1),
    (["d1", "d2", "c4", "c10"], -1),
    (["c4", "d2", "d3", "d4"], 1),
    (["d1", "c4", "d3", "d4"], 1),
    (["d1", "d2", "c4", "d4"], 1),
];

/// Lattice-point classification of `[-40, 40]^4` against the Barnette fan,
/// by dimension of the minimal containing face: 4, 3, 2, 1, 0.
pub const BARNETTE_SCAN_BOUND: i64 = 40;
pub const BARNETTE_SCAN_COUNTS: [u64; 5] = [41_315_292, 1_696_978, 34_190, 260, 1];

/// The point `d1 + e2 + d2 + d4` inside `sigma16`, where the family of
/// further subdivisions starts.
pub const FAMILY_SEED_CONE: [&str; 4] = ["d1", "e2", "d2", "d4"];

/// The simplicial fan over the Barnette sphere.
pub fn barnette_fan() -> Fan {
    let rays: Vec<(String, IntVector)> = BARNETTE_RAYS
        .iter()
        .map(|(l, v)| (l.to_string(), IntVector::from_i64(v)))
        .collect();
    let cones: Vec<(Option<String>, Vec<String>)> = BARNETTE_CONES
        .iter()
        .map(|(name, rays, _)| (Some(name.to_string()), rays.iter().map(|s| s.to_string()).collect()))
        .collect();
    Fan::from_labels(4, rays, cones).expect("embedded Barnette fan is valid")
}

/// The 260 lattice points of `[-40, 40]^4` lying in the relative interior of a
/// ray of the Barnette fan: `m e_i`, `m d4` for `1 <= m <= 40` and `n d1`,
/// `n d2`, `n d3` for `1 <= n <= 20`, sorted.
pub fn barnette_one_face_points() -> Vec<IntVector> {
    let rays: std::collections::HashMap<&str, [i64; 4]> = BARNETTE_RAYS.into_iter().collect();
    let mut pts = Vec::new();
    for (labels, limit) in [(&["e1", "e2", "e3", "e4", "d4"][..], 40), (&["d1", "d2", "d3"][..], 20)] {
        for label in labels {
            let v = rays[label];
            for m in 1..=limit {
                pts.push(IntVector::from_i64(&v.map(|x| x * m)));
            }
        }
    }
    pts.sort();
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_face_point_count() {
        let pts = barnette_one_face_points();
        assert_eq!(pts.len(), 260);
        // d1, d2, d3 have an entry of absolute value 2, so their multiples stop at 20
        assert!(pts.contains(&IntVector::from_i64(&[-20, 0, -40, 20])));
        assert!(!pts.contains(&IntVector::from_i64(&[-21, 0, -42, 21])));
        assert!(pts.contains(&IntVector::from_i64(&[40, 0, 40, -40])));
    }

    #[test]
    fn desingularization_cone_signs_cover_all_new_cones() {
        assert_eq!(DESINGULARIZED_CONES.len(), 41);
        let survivors = BARNETTE_CONES.len() - BARNETTE_SINGULAR.len();
        assert_eq!(survivors + DESINGULARIZED_CONES.len(), 55);
    }
}
