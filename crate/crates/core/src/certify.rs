//! Checking a claimed convex realization of a simplicial sphere.
//!
//! A realization assigns rational coordinates in `Q^d` to the vertices of a
//! `(d-1)`-dimensional complex. It is accepted when each facet spans a
//! supporting hyperplane with every other vertex strictly on one side, and no
//! other `d`-subset of vertices is supported in the same way. Acceptance
//! certifies that the complex is polytopal; rejection only says that this
//! particular coordinate assignment fails.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::elimination::{is_feasible, Inequality};
use crate::linalg::{hyperplane_normal, IntVector, RatVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("facet {0} has affinely dependent vertices")]
    DegenerateFacet(String),
    #[error("no coordinates for vertices {0:?}")]
    MissingCoordinates(Vec<String>),
    #[error("coordinate dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty realization")]
    Empty,
}

/// Vertex label to rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Realization {
    pub coords: BTreeMap<String, RatVector>,
}

impl Realization {
    pub fn new(coords: BTreeMap<String, RatVector>) -> Result<Self, CertError> {
        let mut dims = coords.values().map(RatVector::dim);
        if let Some(d) = dims.next() {
            if let Some(bad) = dims.find(|&x| x != d) {
                return Err(CertError::DimensionMismatch { expected: d, found: bad });
            }
        }
        Ok(Self { coords })
    }

    pub fn from_int_points<'a>(points: impl IntoIterator<Item = (&'a str, &'a IntVector)>) -> Result<Self, CertError> {
        Self::new(points.into_iter().map(|(l, v)| (l.to_string(), v.to_rational())).collect())
    }

    pub fn dim(&self) -> Option<usize> {
        self.coords.values().next().map(RatVector::dim)
    }

    /// Applies `x -> A x + b`.
    pub fn transformed(&self, a: &[Vec<BigRational>], b: &[BigRational]) -> Realization {
        let coords = self
            .coords
            .iter()
            .map(|(l, x)| {
                let y = a
                    .iter()
                    .zip(b)
                    .map(|(row, bi)| row.iter().zip(x.entries()).map(|(aij, xj)| aij * xj).sum::<BigRational>() + bi)
                    .collect();
                (l.clone(), RatVector::new(y).expect("non-empty"))
            })
            .collect();
        Realization { coords }
    }
}

/// A `d`-subset of vertices with the vertices on each side of its hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperplaneSides {
    pub face: String,
    pub above: Vec<String>,
    pub below: Vec<String>,
    pub on: Vec<String>,
}

impl HyperplaneSides {
    pub fn supporting(&self) -> bool {
        self.on.is_empty() && (self.above.is_empty() || self.below.is_empty())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub passed: bool,
    pub verdict: String,
    pub facets_checked: usize,
    /// Facets whose hyperplane is not supporting.
    pub violations: Vec<HyperplaneSides>,
    /// Non-facet vertex subsets whose hyperplane is supporting.
    pub extra_supported: Vec<String>,
}

impl CertificateReport {
    pub fn first_violation(&self) -> Option<&HyperplaneSides> {
        self.violations.first()
    }
}

/// Affine hyperplane through `d` points of `Q^d`: an integer normal and the
/// offset `normal . p_0`. `None` if the points are affinely dependent.
fn affine_hyperplane(points: &[&RatVector]) -> Option<(IntVector, BigRational)> {
    let base = points[0];
    let diffs: Vec<IntVector> = points[1..].iter().map(|p| p.sub(base).clear_denominators()).collect();
    let refs: Vec<&IntVector> = diffs.iter().collect();
    let normal = hyperplane_normal(&refs);
    if normal.is_zero() {
        return None;
    }
    let offset = base.dot_int(&normal);
    Some((normal, offset))
}

fn sides(labels: &[String], points: &[RatVector], face: &[usize]) -> Option<HyperplaneSides> {
    let refs: Vec<&RatVector> = face.iter().map(|&i| &points[i]).collect();
    let (normal, offset) = affine_hyperplane(&refs)?;
    let mut s = HyperplaneSides {
        face: face.iter().map(|&i| labels[i].as_str()).collect(),
        above: vec![],
        below: vec![],
        on: vec![],
    };
    for (i, p) in points.iter().enumerate() {
        if face.contains(&i) {
            continue;
        }
        let v = p.dot_int(&normal) - &offset;
        let bucket = if v.is_positive() {
            &mut s.above
        } else if v.is_negative() {
            &mut s.below
        } else {
            &mut s.on
        };
        bucket.push(labels[i].clone());
    }
    Some(s)
}

/// Checks that `r` realizes `c` as the boundary complex of a convex polytope.
pub fn certify_realization(c: &SimplicialComplex, r: &Realization) -> Result<CertificateReport, CertError> {
    let d = r.dim().ok_or(CertError::Empty)?;
    let facet_size = (c.dim() + 1) as usize;
    if facet_size != d {
        return Err(CertError::DimensionMismatch { expected: facet_size, found: d });
    }
    let missing: Vec<String> = c.labels().iter().filter(|l| !r.coords.contains_key(*l)).cloned().collect();
    if !missing.is_empty() {
        return Err(CertError::MissingCoordinates(missing));
    }
    let labels = c.labels();
    let points: Vec<RatVector> = labels.iter().map(|l| r.coords[l].clone()).collect();

    let mut violations = Vec::new();
    for f in c.facets() {
        let s = sides(labels, &points, f).ok_or_else(|| CertError::DegenerateFacet(c.face_word(f)))?;
        if !s.supporting() {
            violations.push(s);
        }
    }

    let mut extra_supported = Vec::new();
    for subset in (0..labels.len()).combinations(d) {
        if c.facets().contains(&subset) {
            continue;
        }
        if let Some(s) = sides(labels, &points, &subset) {
            if s.supporting() {
                extra_supported.push(s.face);
            }
        }
    }

    let passed = violations.is_empty() && extra_supported.is_empty();
    Ok(CertificateReport {
        passed,
        verdict: if passed { "realization accepted".into() } else { "realization rejected".into() },
        facets_checked: c.facets().len(),
        violations,
        extra_supported,
    })
}

/// For each point, whether it is strictly separated from the others by a
/// hyperplane (a vertex of their convex hull). Decided by eliminating the
/// normal `a` from `a . (p_i - p_j) >= 1` for all `j != i`.
pub fn convex_position(points: &[RatVector]) -> Vec<bool> {
    let Some(d) = points.first().map(RatVector::dim) else { return vec![] };
    (0..points.len())
        .map(|i| {
            let system: Vec<Inequality> = points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| {
                    let diff = points[i].sub(q);
                    let lcm = diff.entries().iter().fold(BigInt::from(1), |l, x| num_integer::lcm(l, x.denom().clone()));
                    let coeffs = diff.clear_denominators().into_entries();
                    Inequality::new(coeffs, lcm)
                })
                .collect();
            is_feasible(&system, d)
        })
        .collect()
}

/// Orientation `det(p_1 - p_0, ..., p_{d-1} - p_0, x - p_0)` by rational
/// Gaussian elimination; used to cross-check supporting hyperplanes.
pub fn orientation(simplex: &[&RatVector], x: &RatVector) -> i8 {
    let base = simplex[0];
    let mut rows: Vec<Vec<BigRational>> =
        simplex[1..].iter().chain(std::iter::once(&x)).map(|p| p.sub(base).entries().to_vec()).collect();
    let n = rows.len();
    let mut det_sign = 1i8;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !rows[r][k].is_zero()) else { return 0 };
        if piv != k {
            rows.swap(piv, k);
            det_sign = -det_sign;
        }
        if rows[k][k].is_negative() {
            det_sign = -det_sign;
        }
        let (top, rest) = rows.split_at_mut(k + 1);
        let pivot = &top[k];
        for row in rest {
            let factor = &row[k] / &pivot[k];
            for (x, p) in row[k..].iter_mut().zip(&pivot[k..]) {
                *x -= &factor * p;
            }
        }
    }
    det_sign
}
