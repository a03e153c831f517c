//! Simplicial fans and the exact predicates used to verify them.
//!
//! Completeness is established locally: every facet (codimension-one face)
//! of a maximal cone must be shared by exactly two maximal cones lying on
//! opposite sides of it, which makes the cones cover space with a constant
//! degree. A single generic witness point then pins that degree to one.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::elimination::{is_feasible, Inequality};
use crate::linalg::{hyperplane_normal, make_primitive, sign, IntVector, LinalgError, RatVector, SquareMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point {point} is not in cone {cone}")]
    NotContained { cone: String, point: String },
    #[error("{} facet(s) not shared by exactly two maximal cones", .0.len())]
    UnpairedFacet(Vec<FacetDefect>),
    #[error("facet {0} has linearly dependent rays")]
    DegenerateFacet(String),
    #[error("witness {witness} lies on facet {facet}")]
    NonGenericWitness { witness: String, facet: String },
    #[error("no generic witness point found among the candidates tried")]
    NoGenericWitness,
    #[error("duplicate ray label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown ray label {0:?}")]
    UnknownLabel(String),
    #[error("ray {0:?} is zero")]
    ZeroRay(String),
    #[error("ray {label:?} is not primitive")]
    NonPrimitiveRay { label: String },
    #[error("rays {0:?} and {1:?} have the same direction")]
    DuplicateRay(String, String),
    #[error("cone {cone} has {found} rays, expected {expected}")]
    WrongConeSize { cone: String, expected: usize, found: usize },
    #[error("cone {0} repeats a ray")]
    RepeatedRay(String),
    #[error("cone {0} is degenerate (determinant 0)")]
    DegenerateCone(String),
    #[error("no cone with index {0}")]
    NoSuchCone(usize),
    #[error("no cone with rays {0}")]
    UnknownCone(String),
    #[error("facet {facet} is not a face of cone {cone}")]
    FacetNotInCone { facet: String, cone: String },
    #[error("ambient dimension must be positive")]
    ZeroDimension,
}

impl From<LinalgError> for FanError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::DimensionMismatch { expected, found } => {
                FanError::DimensionMismatch { expected, found }
            }
            other => FanError::DegenerateCone(other.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ray {
    pub label: String,
    pub vector: IntVector,
}

/// A maximal cone, as an ordered list of ray indices. The order fixes the
/// sign of its determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCone {
    pub name: Option<String>,
    pub rays: Vec<usize>,
}

impl SimplicialCone {
    pub fn new(rays: Vec<usize>) -> Self {
        Self { name: None, rays }
    }

    pub fn named(name: impl Into<String>, rays: Vec<usize>) -> Self {
        Self { name: Some(name.into()), rays }
    }

    pub fn contains_all(&self, face: &[usize]) -> bool {
        face.iter().all(|r| self.rays.contains(r))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Closed,
    Interior,
}

/// One maximal cone on one side of a facet, with the ray it has off the facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FacetIncidence {
    pub cone: usize,
    pub opposite: usize,
}

/// A facet whose incidence count is not two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetDefect {
    pub facet: Vec<String>,
    pub incidence: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletenessReport {
    pub facet_count: usize,
    pub all_facets_paired: bool,
    pub all_pairs_opposite: bool,
    pub witness: IntVector,
    pub witness_multiplicity: usize,
    pub verdict: bool,
    pub unpaired: Vec<FacetDefect>,
    pub same_side: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeDeterminant {
    pub cone: usize,
    pub name: String,
    #[serde(serialize_with = "crate::linalg::serialize_bigint")]
    pub determinant: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub cones: Vec<ConeDeterminant>,
    pub smooth: bool,
}

impl SmoothnessReport {
    pub fn singular(&self) -> impl Iterator<Item = &ConeDeterminant> {
        self.cones.iter().filter(|c| !c.determinant.abs().is_one())
    }
}

/// A complete-or-not simplicial fan with full-dimensional maximal cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient_dim: usize,
    rays: Vec<Ray>,
    cones: Vec<SimplicialCone>,
}

impl Fan {
    /// Validates rays (primitive, nonzero, distinct, uniquely labelled) and
    /// cones (full-dimensional, no repeated ray, nonzero determinant).
    pub fn new(ambient_dim: usize, rays: Vec<Ray>, cones: Vec<SimplicialCone>) -> Result<Self, FanError> {
        if ambient_dim == 0 {
            return Err(FanError::ZeroDimension);
        }
        let mut labels = HashSet::new();
        let mut directions: HashMap<&IntVector, &str> = HashMap::new();
        for ray in &rays {
            if ray.vector.dim() != ambient_dim {
                return Err(FanError::DimensionMismatch { expected: ambient_dim, found: ray.vector.dim() });
            }
            if !labels.insert(ray.label.as_str()) {
                return Err(FanError::DuplicateLabel(ray.label.clone()));
            }
            if ray.vector.is_zero() {
                return Err(FanError::ZeroRay(ray.label.clone()));
            }
            if !ray.vector.is_primitive() {
                return Err(FanError::NonPrimitiveRay { label: ray.label.clone() });
            }
            if let Some(prev) = directions.insert(&ray.vector, &ray.label) {
                return Err(FanError::DuplicateRay(prev.to_string(), ray.label.clone()));
            }
        }
        let fan = Self { ambient_dim, rays, cones };
        for (i, cone) in fan.cones.iter().enumerate() {
            if let Some(&bad) = cone.rays.iter().find(|&&r| r >= fan.rays.len()) {
                return Err(FanError::UnknownLabel(format!("#{bad}")));
            }
            if cone.rays.len() != ambient_dim {
                return Err(FanError::WrongConeSize {
                    cone: fan.cone_name(i),
                    expected: ambient_dim,
                    found: cone.rays.len(),
                });
            }
            let distinct: HashSet<_> = cone.rays.iter().collect();
            if distinct.len() != cone.rays.len() {
                return Err(FanError::RepeatedRay(fan.cone_name(i)));
            }
            if fan.cone_matrix(i).determinant().is_zero() {
                return Err(FanError::DegenerateCone(fan.cone_name(i)));
            }
        }
        Ok(fan)
    }

    /// Builds a fan from labelled rays and cones given by ray labels.
    pub fn from_labels(
        ambient_dim: usize,
        rays: Vec<(String, IntVector)>,
        cones: Vec<(Option<String>, Vec<String>)>,
    ) -> Result<Self, FanError> {
        let index: HashMap<&str, usize> =
            rays.iter().enumerate().map(|(i, (l, _))| (l.as_str(), i)).collect();
        let cones = cones
            .iter()
            .map(|(name, labels)| {
                let rays = labels
                    .iter()
                    .map(|l| index.get(l.as_str()).copied().ok_or_else(|| FanError::UnknownLabel(l.clone())))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(SimplicialCone { name: name.clone(), rays })
            })
            .collect::<Result<Vec<_>, FanError>>()?;
        let rays = rays.into_iter().map(|(label, vector)| Ray { label, vector }).collect();
        Self::new(ambient_dim, rays, cones)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn cones(&self) -> &[SimplicialCone] {
        &self.cones
    }

    pub fn ray_index(&self, label: &str) -> Option<usize> {
        self.rays.iter().position(|r| r.label == label)
    }

    pub fn ray_indices(&self, labels: &[&str]) -> Result<Vec<usize>, FanError> {
        labels
            .iter()
            .map(|l| self.ray_index(l).ok_or_else(|| FanError::UnknownLabel(l.to_string())))
            .collect()
    }

    pub fn ray_with_vector(&self, v: &IntVector) -> Option<usize> {
        self.rays.iter().position(|r| &r.vector == v)
    }

    /// Ray labels of a cone in listed order.
    pub fn cone_labels(&self, cone: usize) -> Vec<&str> {
        self.cones[cone].rays.iter().map(|&r| self.rays[r].label.as_str()).collect()
    }

    /// Concatenated ray labels, e.g. `e1d3e3d4`.
    pub fn cone_word(&self, cone: usize) -> String {
        self.cone_labels(cone).concat()
    }

    /// The cone's name if it has one, otherwise its ray word.
    pub fn cone_name(&self, cone: usize) -> String {
        match &self.cones[cone].name {
            Some(n) => n.clone(),
            None => self.cone_word(cone),
        }
    }

    pub fn face_word(&self, face: &[usize]) -> String {
        face.iter().map(|&r| self.rays[r].label.as_str()).collect()
    }

    /// Index of the maximal cone with exactly these rays, in any order.
    pub fn find_cone(&self, labels: &[&str]) -> Result<usize, FanError> {
        let mut wanted = self.ray_indices(labels)?;
        wanted.sort_unstable();
        self.cones
            .iter()
            .position(|c| {
                let mut r = c.rays.clone();
                r.sort_unstable();
                r == wanted
            })
            .ok_or_else(|| FanError::UnknownCone(labels.concat()))
    }

    pub fn find_cone_by_name(&self, name: &str) -> Option<usize> {
        self.cones.iter().position(|c| c.name.as_deref() == Some(name))
    }

    pub fn cone_matrix(&self, cone: usize) -> SquareMatrix {
        SquareMatrix::from_columns(self.cones[cone].rays.iter().map(|&r| self.rays[r].vector.clone()).collect())
            .expect("cone rays have ambient dimension")
    }

    pub fn cone_determinant(&self, cone: usize) -> BigInt {
        self.cone_matrix(cone).determinant()
    }

    fn check_cone(&self, cone: usize) -> Result<(), FanError> {
        if cone >= self.cones.len() {
            Err(FanError::NoSuchCone(cone))
        } else {
            Ok(())
        }
    }

    /// Coefficients of `p` on the rays of `cone`, in listed order.
    pub fn coefficients(&self, cone: usize, p: &IntVector) -> Result<RatVector, FanError> {
        self.check_cone(cone)?;
        if p.dim() != self.ambient_dim {
            return Err(FanError::DimensionMismatch { expected: self.ambient_dim, found: p.dim() });
        }
        Ok(crate::linalg::solve_coefficients(&self.cone_matrix(cone), p)?)
    }

    pub fn contains(&self, cone: usize, p: &IntVector, mode: Containment) -> Result<bool, FanError> {
        let lambda = self.coefficients(cone, p)?;
        Ok(match mode {
            Containment::Closed => lambda.entries().iter().all(|l| !l.is_negative()),
            Containment::Interior => lambda.entries().iter().all(|l| l.is_positive()),
        })
    }

    /// Rays of `cone` carrying a positive coefficient of `p`, in cone order:
    /// the face containing `p` in its relative interior.
    pub fn minimal_face(&self, cone: usize, p: &IntVector) -> Result<Vec<usize>, FanError> {
        let lambda = self.coefficients(cone, p)?;
        if lambda.entries().iter().any(|l| l.is_negative()) {
            return Err(FanError::NotContained { cone: self.cone_name(cone), point: p.to_string() });
        }
        Ok(self.cones[cone]
            .rays
            .iter()
            .zip(lambda.entries())
            .filter(|(_, l)| l.is_positive())
            .map(|(&r, _)| r)
            .collect())
    }

    /// All codimension-one faces, keyed by sorted ray indices, with the maximal
    /// cones containing them.
    pub fn facet_incidences(&self) -> BTreeMap<Vec<usize>, Vec<FacetIncidence>> {
        let mut map: BTreeMap<Vec<usize>, Vec<FacetIncidence>> = BTreeMap::new();
        for (i, cone) in self.cones.iter().enumerate() {
            for &opposite in &cone.rays {
                let mut facet: Vec<usize> = cone.rays.iter().copied().filter(|&r| r != opposite).collect();
                facet.sort_unstable();
                map.entry(facet).or_default().push(FacetIncidence { cone: i, opposite });
            }
        }
        map
    }

    fn defects(&self, incidences: &BTreeMap<Vec<usize>, Vec<FacetIncidence>>) -> Vec<FacetDefect> {
        incidences
            .iter()
            .filter(|(_, inc)| inc.len() != 2)
            .map(|(facet, inc)| FacetDefect {
                facet: facet.iter().map(|&r| self.rays[r].label.clone()).collect(),
                incidence: inc.len(),
            })
            .collect()
    }

    /// Every facet mapped to the two maximal cones sharing it.
    pub fn facet_pairing(&self) -> Result<BTreeMap<Vec<usize>, (FacetIncidence, FacetIncidence)>, FanError> {
        let incidences = self.facet_incidences();
        let defects = self.defects(&incidences);
        if !defects.is_empty() {
            return Err(FanError::UnpairedFacet(defects));
        }
        Ok(incidences.into_iter().map(|(f, inc)| (f, (inc[0], inc[1]))).collect())
    }

    fn facet_normal(&self, facet: &[usize]) -> Result<IntVector, FanError> {
        let vectors: Vec<&IntVector> = facet.iter().map(|&r| &self.rays[r].vector).collect();
        if vectors.len() + 1 != self.ambient_dim {
            return Err(FanError::DimensionMismatch { expected: self.ambient_dim - 1, found: vectors.len() });
        }
        let normal = hyperplane_normal(&vectors);
        if normal.is_zero() {
            return Err(FanError::DegenerateFacet(self.face_word(facet)));
        }
        Ok(normal)
    }

    /// Whether the two cones lie on strictly opposite sides of their common
    /// facet.
    pub fn opposite_sides(&self, facet: &[usize], pair: (usize, usize)) -> Result<bool, FanError> {
        self.check_cone(pair.0)?;
        self.check_cone(pair.1)?;
        let normal = self.facet_normal(facet)?;
        let opposite = |cone: usize| -> Result<usize, FanError> {
            let c = &self.cones[cone];
            let off: Vec<usize> = c.rays.iter().copied().filter(|r| !facet.contains(r)).collect();
            if off.len() != 1 || !c.contains_all(facet) {
                return Err(FanError::FacetNotInCone { facet: self.face_word(facet), cone: self.cone_name(cone) });
            }
            Ok(off[0])
        };
        let u = opposite(pair.0)?;
        let v = opposite(pair.1)?;
        let su = sign(&normal.dot(&self.rays[u].vector));
        let sv = sign(&normal.dot(&self.rays[v].vector));
        Ok(su != 0 && su == -sv)
    }

    /// Checks that `witness` lies in no facet of any maximal cone. A point on
    /// a facet's hyperplane but outside the facet itself is still generic:
    /// the covering degree is constant off the union of the facets.
    pub fn check_witness(&self, witness: &IntVector) -> Result<(), FanError> {
        if witness.dim() != self.ambient_dim {
            return Err(FanError::DimensionMismatch { expected: self.ambient_dim, found: witness.dim() });
        }
        for (facet, incidences) in self.facet_incidences() {
            let normal = self.facet_normal(&facet)?;
            if !normal.dot(witness).is_zero() {
                continue;
            }
            // on the hyperplane, so the coefficient on the opposite ray is 0
            if self.contains(incidences[0].cone, witness, Containment::Closed)? {
                return Err(FanError::NonGenericWitness {
                    witness: witness.to_string(),
                    facet: self.face_word(&facet),
                });
            }
        }
        Ok(())
    }

    /// `(1, ..., 1)` if generic for this fan, otherwise the first generic
    /// point among `(1, b, b^2, ...)` for `b = 2, 3, ...`.
    pub fn default_witness(&self) -> Result<IntVector, FanError> {
        let n = self.ambient_dim;
        let ones = IntVector::from_i64(&vec![1; n]);
        if self.check_witness(&ones).is_ok() {
            return Ok(ones);
        }
        for base in 2u32..64 {
            let mut entries = Vec::with_capacity(n);
            let mut x = BigInt::one();
            for _ in 0..n {
                entries.push(x.clone());
                x *= base;
            }
            let w = IntVector::new(entries)?;
            if self.check_witness(&w).is_ok() {
                return Ok(w);
            }
        }
        Err(FanError::NoGenericWitness)
    }

    /// Facet pairing, opposite-side test on every pair, and the number of
    /// maximal cones containing the witness in their interior.
    pub fn verify_completeness(&self, witness: &IntVector) -> Result<CompletenessReport, FanError> {
        self.check_witness(witness)?;
        let incidences = self.facet_incidences();
        let unpaired = self.defects(&incidences);
        let mut same_side = Vec::new();
        for (facet, inc) in &incidences {
            if inc.len() == 2 && !self.opposite_sides(facet, (inc[0].cone, inc[1].cone))? {
                same_side.push(facet.iter().map(|&r| self.rays[r].label.clone()).collect());
            }
        }
        let mut witness_multiplicity = 0;
        for i in 0..self.cones.len() {
            if self.contains(i, witness, Containment::Interior)? {
                witness_multiplicity += 1;
            }
        }
        let all_facets_paired = unpaired.is_empty();
        let all_pairs_opposite = same_side.is_empty();
        Ok(CompletenessReport {
            facet_count: incidences.len(),
            all_facets_paired,
            all_pairs_opposite,
            witness: witness.clone(),
            witness_multiplicity,
            verdict: all_facets_paired && all_pairs_opposite && witness_multiplicity == 1,
            unpaired,
            same_side,
        })
    }

    /// [`Fan::verify_completeness`] at the default witness.
    pub fn is_complete(&self) -> Result<bool, FanError> {
        let w = self.default_witness()?;
        Ok(self.verify_completeness(&w)?.verdict)
    }

    pub fn smoothness_report(&self) -> SmoothnessReport {
        let cones: Vec<ConeDeterminant> = (0..self.cones.len())
            .map(|i| ConeDeterminant { cone: i, name: self.cone_name(i), determinant: self.cone_determinant(i) })
            .collect();
        let smooth = cones.iter().all(|c| c.determinant.abs().is_one());
        SmoothnessReport { cones, smooth }
    }

    /// Whether some nonnegative combination of the cone's rays has every
    /// coordinate strictly positive. By homogeneity this is the feasibility of
    /// `lambda >= 0, sum lambda_i v_i >= (1, ..., 1)`.
    pub fn cone_meets_open_orthant(&self, cone: usize) -> Result<bool, FanError> {
        self.check_cone(cone)?;
        let rays = &self.cones[cone].rays;
        let k = rays.len();
        let mut system = Vec::with_capacity(k + self.ambient_dim);
        for i in 0..k {
            let mut c = vec![BigInt::zero(); k];
            c[i] = BigInt::one();
            system.push(Inequality::new(c, BigInt::zero()));
        }
        for j in 0..self.ambient_dim {
            let c = rays.iter().map(|&r| self.rays[r].vector.entries()[j].clone()).collect();
            system.push(Inequality::new(c, BigInt::one()));
        }
        Ok(is_feasible(&system, k))
    }

    /// A fresh ray label `prefix{n}` not used by this fan.
    pub fn fresh_label(&self, prefix: &str) -> String {
        (1..)
            .map(|n| format!("{prefix}{n}"))
            .find(|l| self.ray_index(l).is_none())
            .expect("unbounded label supply")
    }

    /// Primitive ray with the direction of `p`, if it is already a ray.
    pub fn ray_through(&self, p: &IntVector) -> Option<usize> {
        make_primitive(p).ok().and_then(|v| self.ray_with_vector(&v))
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fan in dimension {}: {} rays, {} maximal cones", self.ambient_dim, self.rays.len(), self.cones.len())?;
        for r in &self.rays {
            writeln!(f, "  {} = {}", r.label, r.vector)?;
        }
        for i in 0..self.cones.len() {
            writeln!(f, "  {} = {}", self.cone_name(i), self.cone_word(i))?;
        }
        Ok(())
    }
}

/// The fan of the `2^n` coordinate orthants, with rays `+-e_i` labelled
/// `p{i}` and `m{i}`.
pub fn coordinate_fan(n: usize) -> Fan {
    let mut rays = Vec::with_capacity(2 * n);
    for i in 0..n {
        rays.push(Ray { label: format!("p{}", i + 1), vector: IntVector::unit(n, i) });
        rays.push(Ray { label: format!("m{}", i + 1), vector: IntVector::unit(n, i).neg() });
    }
    let cones = (0..1usize << n)
        .map(|mask| SimplicialCone::new((0..n).map(|i| 2 * i + ((mask >> i) & 1)).collect()))
        .collect();
    Fan::new(n, rays, cones).expect("coordinate fan is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_orthant() -> Fan {
        let rays = (0..4).map(|i| Ray { label: format!("e{}", i + 1), vector: IntVector::unit(4, i) }).collect();
        Fan::new(4, rays, vec![SimplicialCone::new(vec![0, 1, 2, 3])]).unwrap()
    }

    #[test]
    fn rejects_non_primitive_ray() {
        let rays = vec![Ray { label: "a".into(), vector: IntVector::from_i64(&[2, 0]) }];
        assert!(matches!(Fan::new(2, rays, vec![]), Err(FanError::NonPrimitiveRay { .. })));
    }

    #[test]
    fn rejects_degenerate_cone() {
        let rays = vec![
            Ray { label: "a".into(), vector: IntVector::from_i64(&[1, 0]) },
            Ray { label: "b".into(), vector: IntVector::from_i64(&[-1, 0]) },
        ];
        let err = Fan::new(2, rays, vec![SimplicialCone::new(vec![0, 1])]).unwrap_err();
        assert!(matches!(err, FanError::DegenerateCone(_)));
    }

    #[test]
    fn rejects_duplicate_direction() {
        let rays = vec![
            Ray { label: "a".into(), vector: IntVector::from_i64(&[1, 0]) },
            Ray { label: "b".into(), vector: IntVector::from_i64(&[1, 0]) },
        ];
        assert!(matches!(Fan::new(2, rays, vec![]), Err(FanError::DuplicateRay(..))));
    }

    #[test]
    fn single_orthant_is_smooth_but_not_complete() {
        let fan = single_orthant();
        assert!(fan.smoothness_report().smooth);
        let report = fan.verify_completeness(&IntVector::from_i64(&[1, 1, 1, 1])).unwrap();
        assert!(!report.all_facets_paired);
        assert_eq!(report.witness_multiplicity, 1);
        assert!(!report.verdict);
    }

    #[test]
    fn coordinate_fans_are_complete() {
        for n in 1..=4 {
            let fan = coordinate_fan(n);
            assert_eq!(fan.cones().len(), 1 << n);
            assert!(fan.is_complete().unwrap(), "dimension {n}");
            assert!(fan.smoothness_report().smooth);
        }
    }

    #[test]
    fn non_generic_witness_rejected() {
        let fan = coordinate_fan(2);
        let err = fan.verify_completeness(&IntVector::from_i64(&[1, 0])).unwrap_err();
        assert!(matches!(err, FanError::NonGenericWitness { .. }));
    }

    #[test]
    fn minimal_face_outside_cone() {
        let fan = single_orthant();
        let err = fan.minimal_face(0, &IntVector::from_i64(&[1, -1, 0, 0])).unwrap_err();
        assert!(matches!(err, FanError::NotContained { .. }));
        assert!(matches!(
            fan.contains(0, &IntVector::from_i64(&[1, 1]), Containment::Closed),
            Err(FanError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn orthant_meets_itself() {
        assert!(single_orthant().cone_meets_open_orthant(0).unwrap());
        let fan = coordinate_fan(3);
        let hits = (0..8).filter(|&i| fan.cone_meets_open_orthant(i).unwrap()).count();
        assert_eq!(hits, 1);
    }
}
