//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's linear algebra.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use toricfan::{Fan, IntVector};

/// Solves `M x = p` with `M` given by columns, by plain rational Gaussian
/// elimination. `None` if singular.
pub fn gauss_solve(columns: &[Vec<i64>], p: &[i64]) -> Option<Vec<BigRational>> {
    let n = p.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| BigRational::from_integer(c[i].into())).collect();
            row.push(BigRational::from_integer(p[i].into()));
            row
        })
        .collect();
    for k in 0..n {
        let piv = (k..n).find(|&r| !a[r][k].is_zero())?;
        a.swap(k, piv);
        for r in 0..n {
            if r != k && !a[r][k].is_zero() {
                let f = &a[r][k] / &a[k][k];
                for c in k..=n {
                    let t = &f * &a[k][c];
                    a[r][c] -= t;
                }
            }
        }
    }
    Some((0..n).map(|i| &a[i][n] / &a[i][i]).collect())
}

/// Cofactor-expansion determinant, exponential but fine for n <= 5.
pub fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 1 {
        return m[0][0].into();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<i64>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
        let term = BigInt::from(m[0][j]) * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term
        } else {
            total -= term
        }
    }
    total
}

pub fn ray_i64(fan: &Fan, r: usize) -> Vec<i64> {
    fan.rays()[r].vector.to_i64().expect("small rays")
}

pub fn cone_columns(fan: &Fan, cone: usize) -> Vec<Vec<i64>> {
    fan.cones()[cone].rays.iter().map(|&r| ray_i64(fan, r)).collect()
}

/// Face dimension of the smallest cone containing `p`, or `None` if no
/// maximal cone contains it. Solves against every cone; asserts that all
/// containing cones agree on the face.
pub fn oracle_classify(fan: &Fan, p: &[i64]) -> Option<usize> {
    let mut face: Option<Vec<usize>> = None;
    for c in 0..fan.cones().len() {
        let x = gauss_solve(&cone_columns(fan, c), p).expect("simplicial cone");
        if x.iter().any(|v| v.is_negative()) {
            continue;
        }
        let mut f: Vec<usize> =
            fan.cones()[c].rays.iter().zip(&x).filter(|(_, v)| v.is_positive()).map(|(&r, _)| r).collect();
        f.sort();
        match &face {
            Some(g) => assert_eq!(g, &f, "cones disagree on the face of {p:?}"),
            None => face = Some(f),
        }
    }
    face.map(|f| f.len())
}

/// Counts by face dimension (index = dim) and not-covered, over `[-b, b]^n`.
pub fn oracle_scan(fan: &Fan, b: i64) -> (Vec<u64>, u64) {
    let n = fan.ambient_dim();
    let mut counts = vec![0u64; n + 1];
    let mut uncovered = 0;
    let mut p = vec![-b; n];
    loop {
        match oracle_classify(fan, &p) {
            Some(k) => counts[k] += 1,
            None => uncovered += 1,
        }
        let mut i = n;
        loop {
            if i == 0 {
                return (counts, uncovered);
            }
            i -= 1;
            if p[i] < b {
                p[i] += 1;
                break;
            }
            p[i] = -b;
        }
    }
}

pub fn iv(v: &[i64]) -> IntVector {
    IntVector::from_i64(v)
}

/// Sorted label sets of the maximal cones.
pub fn cone_label_sets(fan: &Fan) -> std::collections::BTreeSet<Vec<String>> {
    (0..fan.cones().len())
        .map(|c| {
            let mut l: Vec<String> = fan.cone_labels(c).into_iter().map(str::to_string).collect();
            l.sort();
            l
        })
        .collect()
}

/// Boundary of the simplex on `v0..v_d` as label facets.
pub fn simplex_boundary(d: usize) -> Vec<Vec<String>> {
    (0..=d).map(|skip| (0..=d).filter(|&i| i != skip).map(|i| format!("v{i}")).collect()).collect()
}

/// Boundary of the cross-polytope in `R^d`: vertices `p_i`, `m_i`.
pub fn cross_polytope(d: usize) -> (Vec<Vec<String>>, Vec<(String, Vec<i64>)>) {
    let mut facets = Vec::new();
    for mask in 0..(1u32 << d) {
        facets.push((0..d).map(|i| format!("{}{}", if mask >> i & 1 == 1 { "m" } else { "p" }, i)).collect());
    }
    let mut coords = Vec::new();
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = 1;
        coords.push((format!("p{i}"), e.clone()));
        e[i] = -1;
        coords.push((format!("m{i}"), e));
    }
    (facets, coords)
}
