//! Exact integer and rational vectors, determinants and linear solves.
//!
//! Everything here is arbitrary precision. The geometric predicates built on
//! top (cone membership, facet normals, supporting hyperplanes) never touch
//! floating point.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("basis is singular (determinant 0)")]
    SingularBasis,
    #[error("the zero vector has no primitive reduction")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square: {rows} columns of length {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("vectors must have positive dimension")]
    EmptyVector,
}

/// A lattice point of `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self, LinalgError> {
        if entries.is_empty() {
            return Err(LinalgError::EmptyVector);
        }
        Ok(Self(entries))
    }

    /// Convenience constructor for small literals. Panics on an empty slice.
    pub fn from_i64(entries: &[i64]) -> Self {
        assert!(!entries.is_empty(), "IntVector must be non-empty");
        Self(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "IntVector must be non-empty");
        Self(vec![BigInt::zero(); dim])
    }

    /// The `i`-th standard basis vector of `Z^dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), other.dim());
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), other.dim());
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }

    /// Appends one coordinate.
    pub fn extended(&self, last: BigInt) -> IntVector {
        let mut entries = self.0.clone();
        entries.push(last);
        IntVector(entries)
    }

    /// gcd of the entries (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn to_rational(&self) -> RatVector {
        RatVector(self.0.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|x| i64::try_from(x).ok()).collect()
    }
}

impl serde::Serialize for IntVector {
    /// As a list of decimal strings.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(BigInt::to_string))
    }
}

/// Serializes a big integer as a decimal string.
pub fn serialize_bigint<S: serde::Serializer>(x: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&x.to_string())
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A point of `Q^n`. `BigRational` keeps every entry in lowest terms with a
/// positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector(Vec<BigRational>);

impl RatVector {
    pub fn new(entries: Vec<BigRational>) -> Result<Self, LinalgError> {
        if entries.is_empty() {
            return Err(LinalgError::EmptyVector);
        }
        Ok(Self(entries))
    }

    /// Builds a vector from `(numerator, denominator)` pairs. Panics on a zero
    /// denominator or an empty slice.
    pub fn from_fractions(entries: &[(i64, i64)]) -> Self {
        assert!(!entries.is_empty(), "RatVector must be non-empty");
        Self(
            entries
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.dim(), other.dim());
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn dot_int(&self, other: &IntVector) -> BigRational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(other.entries())
            .map(|(a, b)| a * BigRational::from_integer(b.clone()))
            .sum()
    }

    /// Multiplies by the lcm of the denominators, giving a positive multiple
    /// with integer entries.
    pub fn clear_denominators(&self) -> IntVector {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        IntVector(
            self.0
                .iter()
                .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
    }

    /// Integer vector if every entry has denominator 1.
    pub fn to_integer(&self) -> Option<IntVector> {
        if self.0.iter().all(|x| x.is_integer()) {
            Some(IntVector(self.0.iter().map(|x| x.to_integer()).collect()))
        } else {
            None
        }
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A square integer matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    columns: Vec<IntVector>,
}

impl SquareMatrix {
    pub fn from_columns(columns: Vec<IntVector>) -> Result<Self, LinalgError> {
        let n = columns.len();
        if n == 0 {
            return Err(LinalgError::EmptyVector);
        }
        if let Some(bad) = columns.iter().find(|c| c.dim() != n) {
            return Err(LinalgError::NotSquare { rows: n, cols: bad.dim() });
        }
        Ok(Self { columns })
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[IntVector] {
        &self.columns
    }

    pub fn determinant(&self) -> BigInt {
        // det(M) = det(M^T), so the columns can be fed in as rows.
        bareiss_determinant(self.columns.iter().map(|c| c.0.clone()).collect())
    }

    /// Adjugate rows: row `i` is the linear functional `x -> det(M) * lambda_i(x)`
    /// where `lambda` solves `M lambda = x`.
    pub fn adjugate_rows(&self) -> Vec<IntVector> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let others: Vec<&IntVector> = self
                    .columns
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, c)| c)
                    .collect();
                // det(c_1..x..c_n) with x at position i is linear in x: the
                // normal of the other columns, signed by the position shift.
                let normal = hyperplane_normal(&others);
                if (n - 1 - i).is_multiple_of(2) {
                    normal
                } else {
                    normal.neg()
                }
            })
            .collect()
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination. Rows may be
/// swapped internally; the sign is tracked.
pub fn bareiss_determinant(mut rows: Vec<Vec<BigInt>>) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if rows[k][k].is_zero() {
            match (k + 1..n).find(|&r| !rows[r][k].is_zero()) {
                Some(r) => {
                    rows.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &rows[i][j] * &rows[k][k] - &rows[i][k] * &rows[k][j];
                rows[i][j] = v / &prev;
            }
        }
        prev = rows[k][k].clone();
    }
    let det = rows[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Determinant of the matrix whose columns are the given vectors, in order.
pub fn determinant(m: &SquareMatrix) -> BigInt {
    m.determinant()
}

/// Solves `basis * lambda = p` exactly.
pub fn solve_coefficients(basis: &SquareMatrix, p: &IntVector) -> Result<RatVector, LinalgError> {
    if p.dim() != basis.dim() {
        return Err(LinalgError::DimensionMismatch { expected: basis.dim(), found: p.dim() });
    }
    let det = basis.determinant();
    if det.is_zero() {
        return Err(LinalgError::SingularBasis);
    }
    let lambda = basis
        .adjugate_rows()
        .iter()
        .map(|row| BigRational::new(row.dot(p), det.clone()))
        .collect();
    Ok(RatVector(lambda))
}

/// Divides by the gcd of the entries. Signs are preserved.
pub fn make_primitive(v: &IntVector) -> Result<IntVector, LinalgError> {
    let g = v.content();
    if g.is_zero() {
        return Err(LinalgError::ZeroVector);
    }
    Ok(IntVector(v.0.iter().map(|x| x / &g).collect()))
}

/// Integer normal of the span of `n - 1` vectors in `Z^n`, normalised so that
/// `normal . x = det(v_1, ..., v_{n-1}, x)`. Zero iff the vectors are
/// dependent.
pub fn hyperplane_normal(vectors: &[&IntVector]) -> IntVector {
    let n = vectors.len() + 1;
    debug_assert!(vectors.iter().all(|v| v.dim() == n));
    let entries = (0..n)
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = vectors
                .iter()
                .map(|v| {
                    v.0.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let m = bareiss_determinant(minor);
            // cofactor of entry (n, j) in 1-based indexing
            if (n - 1 + j).is_multiple_of(2) {
                m
            } else {
                -m
            }
        })
        .collect();
    IntVector(entries)
}

/// Sign of a big integer as -1, 0 or 1.
pub fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(cols: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_columns(cols.iter().map(|c| IntVector::from_i64(c)).collect()).unwrap()
    }

    #[test]
    fn identity_and_swap() {
        let id = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(id.determinant(), BigInt::from(1));
        let sw = m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(sw.determinant(), BigInt::from(-1));
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let a = m(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 5]]);
        // Laplace: 0*(0*5-0*1) - 3*(2*5-1*1) + 1*(2*0-1*0) = -27
        assert_eq!(a.determinant(), BigInt::from(-27));
    }

    #[test]
    fn singular_basis_rejected() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            solve_coefficients(&a, &IntVector::from_i64(&[1, 1])),
            Err(LinalgError::SingularBasis)
        );
    }

    #[test]
    fn primitive_reduction() {
        assert_eq!(
            make_primitive(&IntVector::from_i64(&[2, -2, 0, 0])).unwrap(),
            IntVector::from_i64(&[1, -1, 0, 0])
        );
        assert_eq!(make_primitive(&IntVector::zero(3)), Err(LinalgError::ZeroVector));
    }

    #[test]
    fn normal_is_orthogonal() {
        let a = IntVector::from_i64(&[1, 2, 3, 4]);
        let b = IntVector::from_i64(&[0, -1, 5, 2]);
        let c = IntVector::from_i64(&[7, 0, 0, 1]);
        let n = hyperplane_normal(&[&a, &b, &c]);
        assert!(n.dot(&a).is_zero() && n.dot(&b).is_zero() && n.dot(&c).is_zero());
        let x = IntVector::from_i64(&[1, 1, -1, 3]);
        let det = SquareMatrix::from_columns(vec![a, b, c, x.clone()]).unwrap().determinant();
        assert_eq!(n.dot(&x), det);
    }

    #[test]
    fn adjugate_inverts() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let p = IntVector::from_i64(&[5, -2, 7]);
        let lambda = solve_coefficients(&a, &p).unwrap();
        let back: Vec<BigRational> = (0..3)
            .map(|r| {
                a.columns()
                    .iter()
                    .zip(lambda.entries())
                    .map(|(c, l)| l * BigRational::from_integer(c.entries()[r].clone()))
                    .sum()
            })
            .collect();
        assert_eq!(RatVector::new(back).unwrap(), p.to_rational());
    }

    #[test]
    fn clear_denominators_positive_multiple() {
        let v = RatVector::from_fractions(&[(1, 2), (-2, 3), (0, 1)]);
        assert_eq!(v.clear_denominators(), IntVector::from_i64(&[3, -4, 0]));
    }
}
