//! Classification of the lattice points of a box `[-B, B]^n` by the dimension
//! of the face of the fan containing them in its relative interior.
//!
//! Each maximal cone is turned into `n` integer inequalities (signed adjugate
//! rows), so membership is `n` machine-integer dot products and the face
//! dimension is the number of inequalities that are strict. The box is split
//! into slabs along the first coordinate; slab results are merged in order,
//! so reports do not depend on the worker count.

use std::fmt;

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::fan::{Containment, Fan, FanError};
use crate::linalg::IntVector;

/// Not-covered witnesses kept in a report.
pub const MAX_WITNESSES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("bound must be at least 1")]
    BadBound,
    #[error("facet inequalities of cone {0} overflow 64-bit arithmetic at this bound")]
    Overflow(String),
    #[error("point {point} lies in {containing} maximal cones but its face is in {expected}")]
    Inconsistent { point: String, containing: usize, expected: usize },
    #[error("failed to start worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Fan(#[from] FanError),
}

/// Where a lattice point sits relative to the fan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PointClass {
    /// In the relative interior of a face of this dimension. Dimension `n` is
    /// the interior of a maximal cone, `n - 1` a facet shared by two cones,
    /// and `0` the origin.
    Covered { face_dim: usize },
    NotCovered,
}

impl PointClass {
    pub fn describe(&self, ambient_dim: usize) -> String {
        match *self {
            PointClass::NotCovered => "not covered".into(),
            PointClass::Covered { face_dim } if face_dim == ambient_dim => "interior points of a cone".into(),
            PointClass::Covered { face_dim } if face_dim + 1 == ambient_dim => {
                "rel. int. points of the common facet of two cones".into()
            }
            PointClass::Covered { face_dim: 0 } => "the origin".into(),
            PointClass::Covered { face_dim } => format!("rel. int. points of a common {face_dim}-face"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub ambient_dim: usize,
    pub bound: i64,
    /// `counts_by_face_dim[k]` is the number of points in the relative
    /// interior of a `k`-dimensional cone.
    pub counts_by_face_dim: Vec<u64>,
    pub not_covered: u64,
    pub one_face_points: Option<Vec<IntVector>>,
    pub not_covered_witnesses: Vec<IntVector>,
}

impl ScanReport {
    pub fn total(&self) -> u64 {
        self.counts_by_face_dim.iter().sum::<u64>() + self.not_covered
    }

    pub fn expected_total(&self) -> u64 {
        ((2 * self.bound + 1) as u64).pow(self.ambient_dim as u32)
    }

    /// Counts from the interior of maximal cones down to the origin.
    pub fn counts_descending(&self) -> Vec<u64> {
        self.counts_by_face_dim.iter().rev().copied().collect()
    }

    pub fn count(&self, class: PointClass) -> u64 {
        match class {
            PointClass::Covered { face_dim } => self.counts_by_face_dim.get(face_dim).copied().unwrap_or(0),
            PointClass::NotCovered => self.not_covered,
        }
    }

    pub fn sum_check(&self) -> bool {
        self.total() == self.expected_total()
    }
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lattice points in [-{0}, {0}]^{1}", self.bound, self.ambient_dim)?;
        for k in (0..=self.ambient_dim).rev() {
            let class = PointClass::Covered { face_dim: k };
            writeln!(f, "  {:<52} {:>12}", class.describe(self.ambient_dim), self.count(class))?;
        }
        writeln!(f, "  {:<52} {:>12}", "not covered", self.not_covered)?;
        write!(f, "  {:<52} {:>12}", "total", self.total())
    }
}

/// Integer facet inequalities of every maximal cone.
struct ConeKernel {
    n: usize,
    /// `cones * n * n` entries; row `i` of cone `c` is at `(c * n + i) * n`.
    normals: Vec<i64>,
    cones: usize,
}

impl ConeKernel {
    fn new(fan: &Fan, bound: i64) -> Result<Self, ScanError> {
        let n = fan.ambient_dim();
        let mut normals = Vec::with_capacity(fan.cones().len() * n * n);
        for c in 0..fan.cones().len() {
            let m = fan.cone_matrix(c);
            let flip = m.determinant().is_negative();
            for row in m.adjugate_rows() {
                let row = if flip { row.neg() } else { row };
                for x in row.entries() {
                    let v = x.to_i64().filter(|v| {
                        v.checked_abs()
                            .and_then(|a| a.checked_mul(bound))
                            .and_then(|a| a.checked_mul(n as i64))
                            .is_some()
                    });
                    normals.push(v.ok_or_else(|| ScanError::Overflow(fan.cone_name(c)))?);
                }
            }
        }
        Ok(Self { n, normals, cones: fan.cones().len() })
    }

    #[inline]
    fn classify(&self, p: &[i64]) -> Option<usize> {
        let n = self.n;
        'cone: for c in 0..self.cones {
            let block = &self.normals[c * n * n..(c + 1) * n * n];
            let mut positive = 0;
            for row in block.chunks_exact(n) {
                let s: i64 = row.iter().zip(p).map(|(a, b)| a * b).sum();
                if s < 0 {
                    continue 'cone;
                }
                if s > 0 {
                    positive += 1;
                }
            }
            return Some(positive);
        }
        None
    }
}

#[derive(Default)]
struct SlabResult {
    counts: Vec<u64>,
    not_covered: u64,
    one_face: Vec<IntVector>,
    witnesses: Vec<IntVector>,
}

fn scan_slab(kernel: &ConeKernel, first: i64, bound: i64, collect_one_face: bool) -> SlabResult {
    let n = kernel.n;
    let mut out = SlabResult { counts: vec![0; n + 1], ..Default::default() };
    let mut p = vec![-bound; n];
    p[0] = first;
    if n == 1 {
        tally(kernel, &p, &mut out, collect_one_face);
        return out;
    }
    loop {
        tally(kernel, &p, &mut out, collect_one_face);
        // odometer over coordinates 1..n, last fastest
        let mut i = n - 1;
        loop {
            if p[i] < bound {
                p[i] += 1;
                break;
            }
            p[i] = -bound;
            i -= 1;
            if i == 0 {
                return out;
            }
        }
    }
}

#[inline]
fn tally(kernel: &ConeKernel, p: &[i64], out: &mut SlabResult, collect_one_face: bool) {
    match kernel.classify(p) {
        Some(k) => {
            out.counts[k] += 1;
            if k == 1 && collect_one_face {
                out.one_face.push(IntVector::from_i64(p));
            }
        }
        None => {
            out.not_covered += 1;
            if out.witnesses.len() < MAX_WITNESSES {
                out.witnesses.push(IntVector::from_i64(p));
            }
        }
    }
}

/// Scans `[-bound, bound]^n` on the global rayon pool.
pub fn scan_box(fan: &Fan, bound: i64, collect_one_face: bool) -> Result<ScanReport, ScanError> {
    scan_impl(fan, bound, collect_one_face)
}

/// Scans on a dedicated pool of `workers` threads.
pub fn scan_box_with_workers(
    fan: &Fan,
    bound: i64,
    workers: usize,
    collect_one_face: bool,
) -> Result<ScanReport, ScanError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| ScanError::Pool(e.to_string()))?;
    pool.install(|| scan_impl(fan, bound, collect_one_face))
}

fn scan_impl(fan: &Fan, bound: i64, collect_one_face: bool) -> Result<ScanReport, ScanError> {
    if bound < 1 {
        return Err(ScanError::BadBound);
    }
    let kernel = ConeKernel::new(fan, bound)?;
    let n = fan.ambient_dim();
    let slabs: Vec<SlabResult> =
        (-bound..=bound).into_par_iter().map(|x| scan_slab(&kernel, x, bound, collect_one_face)).collect();
    let mut counts = vec![0u64; n + 1];
    let mut not_covered = 0;
    let mut one_face = Vec::new();
    let mut witnesses = Vec::new();
    for s in slabs {
        for (c, x) in counts.iter_mut().zip(&s.counts) {
            *c += x;
        }
        not_covered += s.not_covered;
        one_face.extend(s.one_face);
        witnesses.extend(s.witnesses);
    }
    witnesses.truncate(MAX_WITNESSES);
    let one_face_points = collect_one_face.then(|| {
        one_face.sort();
        one_face
    });
    Ok(ScanReport {
        ambient_dim: n,
        bound,
        counts_by_face_dim: counts,
        not_covered,
        one_face_points,
        not_covered_witnesses: witnesses,
    })
}

/// Classifies one point by exact rational coefficients. Also checks that the
/// maximal cones containing the point are exactly those containing its
/// minimal face.
pub fn classify_point(fan: &Fan, p: &IntVector) -> Result<PointClass, ScanError> {
    let mut containing = Vec::new();
    for c in 0..fan.cones().len() {
        if fan.contains(c, p, Containment::Closed)? {
            containing.push(c);
        }
    }
    let Some(&first) = containing.first() else { return Ok(PointClass::NotCovered) };
    let face = fan.minimal_face(first, p)?;
    let expected = fan.cones().iter().filter(|c| c.contains_all(&face)).count();
    if expected != containing.len() {
        return Err(ScanError::Inconsistent { point: p.to_string(), containing: containing.len(), expected });
    }
    Ok(PointClass::Covered { face_dim: face.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::coordinate_fan;

    #[test]
    fn coordinate_fan_counts() {
        // in [-1,1]^2 against the quadrant fan: 4 interior, 4 on axes, origin
        let r = scan_box_with_workers(&coordinate_fan(2), 1, 2, true).unwrap();
        assert_eq!(r.counts_by_face_dim, vec![1, 4, 4]);
        assert_eq!(r.not_covered, 0);
        assert_eq!(r.one_face_points.as_ref().unwrap().len(), 4);
        assert!(r.sum_check());
    }

    #[test]
    fn bound_zero_rejected() {
        assert_eq!(scan_box(&coordinate_fan(2), 0, false).unwrap_err(), ScanError::BadBound);
    }

    #[test]
    fn half_plane_reports_uncovered() {
        let full = coordinate_fan(2);
        let half = Fan::new(2, full.rays().to_vec(), full.cones()[..2].to_vec()).unwrap();
        let r = scan_box(&half, 2, false).unwrap();
        assert!(r.not_covered > 0);
        assert!(r.sum_check());
        let w = &r.not_covered_witnesses[0];
        assert_eq!(classify_point(&half, w).unwrap(), PointClass::NotCovered);
    }

    #[test]
    fn one_dimensional() {
        let r = scan_box(&coordinate_fan(1), 3, false).unwrap();
        assert_eq!(r.counts_by_face_dim, vec![1, 6]);
    }
}
