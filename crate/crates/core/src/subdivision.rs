//! Stellar subdivision of simplicial fans, the desingularisation of the
//! Barnette fan, fan suspension, and the family of further subdivisions.

use serde::Serialize;
use thiserror::Error;

use crate::datasets::{barnette_fan, DESINGULARIZATION_POINTS, FAMILY_SEED_CONE};
use crate::fan::{Containment, Fan, FanError, Ray, SimplicialCone};
use crate::linalg::{make_primitive, IntVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubdivisionError {
    #[error("point {point} lies on the existing ray {label}")]
    PointIsRay { point: String, label: String },
    #[error("point {0} is not in the support of the fan")]
    OutsideSupport(String),
    #[error("cannot subdivide at the origin")]
    ZeroPoint,
    #[error("label {0:?} is already used by a ray")]
    DuplicateLabel(String),
    #[error("fan is not smooth")]
    NotSmooth,
    #[error("fan is not complete")]
    NotComplete,
    #[error(transparent)]
    Fan(#[from] FanError),
}

/// Record of one stellar subdivision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionStep {
    pub new_ray_label: String,
    pub new_ray: IntVector,
    /// Rays of the face containing the new ray in its relative interior.
    pub face: Vec<String>,
    /// Names of the replaced maximal cones of the input fan.
    pub affected_cones: Vec<String>,
    /// Replacement cones, as ray labels in listed order.
    pub produced_cones: Vec<Vec<String>>,
}

/// Stellar subdivision of `fan` at the ray through `p`.
///
/// Every maximal cone `F + G` containing the minimal face `F` of `p` is
/// replaced by the cones obtained by swapping one ray of `F` for the new ray,
/// keeping the position of the swapped ray. Other cones are left untouched
/// and keep their place in the cone list.
pub fn stellar_subdivide(fan: &Fan, p: &IntVector, label: &str) -> Result<(Fan, SubdivisionStep), SubdivisionError> {
    if p.dim() != fan.ambient_dim() {
        return Err(FanError::DimensionMismatch { expected: fan.ambient_dim(), found: p.dim() }.into());
    }
    let v = make_primitive(p).map_err(|_| SubdivisionError::ZeroPoint)?;
    if let Some(r) = fan.ray_with_vector(&v) {
        return Err(SubdivisionError::PointIsRay { point: p.to_string(), label: fan.rays()[r].label.clone() });
    }
    if fan.ray_index(label).is_some() {
        return Err(SubdivisionError::DuplicateLabel(label.to_string()));
    }
    let mut holder = None;
    for i in 0..fan.cones().len() {
        if fan.contains(i, &v, Containment::Closed)? {
            holder = Some(i);
            break;
        }
    }
    let holder = holder.ok_or_else(|| SubdivisionError::OutsideSupport(p.to_string()))?;
    let face = fan.minimal_face(holder, &v)?;
    // a one-ray face would mean v is a positive multiple of that ray
    debug_assert!(face.len() >= 2);

    let new_index = fan.rays().len();
    let mut rays = fan.rays().to_vec();
    rays.push(Ray { label: label.to_string(), vector: v.clone() });
    let label_of = |r: usize| rays[r].label.clone();

    let mut cones = Vec::with_capacity(fan.cones().len() + face.len());
    let mut affected_cones = Vec::new();
    let mut produced_cones = Vec::new();
    for (i, cone) in fan.cones().iter().enumerate() {
        if !cone.contains_all(&face) {
            cones.push(cone.clone());
            continue;
        }
        affected_cones.push(fan.cone_name(i));
        for pos in 0..cone.rays.len() {
            if !face.contains(&cone.rays[pos]) {
                continue;
            }
            let mut r = cone.rays.clone();
            r[pos] = new_index;
            produced_cones.push(r.iter().map(|&x| label_of(x)).collect());
            cones.push(SimplicialCone::new(r));
        }
    }
    let step = SubdivisionStep {
        new_ray_label: label.to_string(),
        new_ray: v,
        face: face.iter().map(|&r| label_of(r)).collect(),
        affected_cones,
        produced_cones,
    };
    let refined = Fan::new(fan.ambient_dim(), rays, cones)?;
    Ok((refined, step))
}

/// Stellar subdivision at the interior point of a maximal cone given by the
/// sum of its rays.
pub fn subdivide_cone(fan: &Fan, cone: usize, label: &str) -> Result<(Fan, SubdivisionStep), SubdivisionError> {
    let p = cone_ray_sum(fan, cone);
    stellar_subdivide(fan, &p, label)
}

pub fn cone_ray_sum(fan: &Fan, cone: usize) -> IntVector {
    fan.cones()[cone]
        .rays
        .iter()
        .map(|&r| fan.rays()[r].vector.clone())
        .reduce(|a, b| a.add(&b))
        .expect("cones are non-empty")
}

/// One stage of the desingularisation: the step and the fan after it.
#[derive(Clone, Debug)]
pub struct Stage {
    pub step: SubdivisionStep,
    pub fan: Fan,
}

/// Replays the ten subdivisions at `c1, c2, c3, c4, c5, c7, c9, c6, c8, c10`
/// starting from the Barnette fan, returning every intermediate fan.
pub fn desingularization_stages() -> Vec<Stage> {
    let mut fan = barnette_fan();
    let mut stages = Vec::with_capacity(DESINGULARIZATION_POINTS.len());
    for point in DESINGULARIZATION_POINTS {
        let v = IntVector::from_i64(&point.vector);
        assert!(v.is_primitive(), "{} must be primitive", point.label);
        let (next, step) = stellar_subdivide(&fan, &v, point.label)
            .unwrap_or_else(|e| panic!("subdivision at {} failed: {e}", point.label));
        fan = next;
        stages.push(Stage { step, fan: fan.clone() });
    }
    stages
}

/// The smooth complete refinement of the Barnette fan (18 rays, 55 cones) and
/// the log of the ten subdivisions producing it.
pub fn desingularize_barnette() -> (Fan, Vec<SubdivisionStep>) {
    let stages = desingularization_stages();
    let fan = stages.last().expect("ten stages").fan.clone();
    (fan, stages.into_iter().map(|s| s.step).collect())
}

/// Index of a maximal cone of `fine` not contained in any maximal cone of
/// `coarse`, if there is one.
pub fn refinement_counterexample(fine: &Fan, coarse: &Fan) -> Result<Option<usize>, FanError> {
    if fine.ambient_dim() != coarse.ambient_dim() {
        return Err(FanError::DimensionMismatch { expected: coarse.ambient_dim(), found: fine.ambient_dim() });
    }
    'fine: for (i, cone) in fine.cones().iter().enumerate() {
        'coarse: for j in 0..coarse.cones().len() {
            for &r in &cone.rays {
                if !coarse.contains(j, &fine.rays()[r].vector, Containment::Closed)? {
                    continue 'coarse;
                }
            }
            continue 'fine;
        }
        return Ok(Some(i));
    }
    Ok(None)
}

/// Whether every maximal cone of `fine` lies in some maximal cone of `coarse`.
pub fn refines(fine: &Fan, coarse: &Fan) -> Result<bool, FanError> {
    Ok(refinement_counterexample(fine, coarse)?.is_none())
}

/// The fan over the suspension: rays get a trailing zero coordinate, two new
/// rays `N = e_{n+1}` and `S = -e_{n+1}` are added, and each maximal cone `s`
/// becomes `s + N` and `s + S` (apex last).
pub fn suspend_fan(fan: &Fan) -> Fan {
    let n = fan.ambient_dim();
    let mut rays: Vec<Ray> = fan
        .rays()
        .iter()
        .map(|r| Ray { label: r.label.clone(), vector: r.vector.extended(0.into()) })
        .collect();
    let north = fan.ray_index("N").map_or_else(|| "N".to_string(), |_| fan.fresh_label("N"));
    let south = fan.ray_index("S").map_or_else(|| "S".to_string(), |_| fan.fresh_label("S"));
    let ni = rays.len();
    rays.push(Ray { label: north.clone(), vector: IntVector::unit(n + 1, n) });
    rays.push(Ray { label: south.clone(), vector: IntVector::unit(n + 1, n).neg() });
    let mut cones = Vec::with_capacity(2 * fan.cones().len());
    for (i, cone) in fan.cones().iter().enumerate() {
        for (apex, apex_label) in [(ni, &north), (ni + 1, &south)] {
            let mut r = cone.rays.clone();
            r.push(apex);
            let name = cone.name.as_ref().map(|_| format!("{}+{}", fan.cone_name(i), apex_label));
            cones.push(SimplicialCone { name, rays: r });
        }
    }
    Fan::new(n + 1, rays, cones).expect("suspension of a valid fan is valid")
}

/// Chooses the next cone to subdivide in a family: the seed cone
/// `d1 e2 d2 d4` when present on the first step, otherwise the cone whose
/// sorted ray labels are lexicographically smallest.
fn select_family_cone(fan: &Fan, first: bool) -> usize {
    if first {
        if let Ok(i) = fan.find_cone(&FAMILY_SEED_CONE) {
            return i;
        }
    }
    (0..fan.cones().len())
        .min_by_key(|&i| {
            let mut labels = fan.cone_labels(i);
            labels.sort_unstable();
            labels.into_iter().map(str::to_string).collect::<Vec<_>>()
        })
        .expect("fan has cones")
}

/// `k` successive subdivisions of a smooth complete fan, each at the ray sum
/// of a selected maximal cone. Each member has three more maximal cones than
/// the previous one (four in dimension four) and stays smooth and complete.
pub fn generate_family(base: &Fan, k: usize) -> Result<Vec<Fan>, SubdivisionError> {
    if !base.smoothness_report().smooth {
        return Err(SubdivisionError::NotSmooth);
    }
    if !base.is_complete()? {
        return Err(SubdivisionError::NotComplete);
    }
    let mut out = Vec::with_capacity(k);
    let mut current = base.clone();
    for step in 0..k {
        let cone = select_family_cone(&current, step == 0);
        let label = current.fresh_label("f");
        let (next, _) = subdivide_cone(&current, cone, &label)?;
        out.push(next.clone());
        current = next;
    }
    Ok(out)
}
