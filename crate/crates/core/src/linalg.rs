//! Exact rational linear algebra: dense matrices, Gauss-Jordan reduction,
//! nullspaces and canonical subspaces.
//!
//! Every subspace is stored by the reduced row-echelon form of a spanning
//! set. RREF is unique for a given row space, so two subspaces are equal
//! exactly when their stored bases agree entry by entry.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision exact fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Multiplicative inverse; `None` for zero.
pub fn checked_inverse(x: &Rational) -> Option<Rational> {
    if x.is_zero() {
        None
    } else {
        Some(x.recip())
    }
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// Parses `p`, `-p`, `p/q` with optional surrounding whitespace.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(text).map_err(|_| bad())?,
        )),
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from equally long rows. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            entries,
        })
    }

    /// Convenience constructor from small integer literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        Matrix::from_rows(cols, rows).expect("ragged literal matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} columns, vector has length {}",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Gauss-Jordan reduction of a list of rows in place. Returns pivot columns.
///
/// Pivot is the first row (from the current position) with a nonzero entry
/// in the current column, so the output depends only on the row space.
fn reduce_rows(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);

        let inv = rows[next][col].recip();
        if !inv.is_one() {
            for x in rows[next][col..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let support: Vec<usize> = (col..cols).filter(|&c| !rows[next][c].is_zero()).collect();
        let pivot_row = std::mem::take(&mut rows[next]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row.is_empty() || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &c in &support {
                row[c] -= &factor * &pivot_row[c];
            }
        }
        rows[next] = pivot_row;
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// Reduced row-echelon form and its pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows = m.to_rows();
    let pivots = reduce_rows(&mut rows, m.cols);
    let out = Matrix::from_rows(m.cols, rows).expect("row lengths preserved");
    (out, pivots)
}

/// A linear subspace of `Q^ambient_dim`, stored by a canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace::span(ambient_dim, Matrix::identity(ambient_dim).to_rows())
            .expect("identity rows have the right length")
    }

    /// Span of the given vectors.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in subspace of Q^{ambient_dim}",
                v.len()
            )));
        }
        let mut rows: Vec<Vec<Rational>> = vectors
            .into_iter()
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let pivots = reduce_rows(&mut rows, ambient_dim);
        rows.truncate(pivots.len());
        Ok(Subspace {
            ambient_dim,
            basis: rows,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// What is left of `v` after clearing every pivot coordinate with the
    /// basis. Zero iff `v` lies in the subspace.
    pub fn residual(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against subspace of Q^{}",
                v.len(),
                self.ambient_dim
            )));
        }
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (x, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &factor * b;
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.residual(v)?.iter().all(Zero::is_zero))
    }

    /// True iff every basis vector of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The image of this subspace under `m`.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        let images = self
            .basis
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(m.rows(), images)
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.ambient_dim, self.basis.clone()).expect("basis rows are well formed")
    }
}

/// Canonical basis of `{v : m v = 0}`.
pub fn nullspace(m: &Matrix) -> Subspace {
    nullspace_of_rows(m.cols(), m.to_rows())
}

/// Nullspace of the matrix with the given rows. Zero rows are dropped
/// before elimination, so callers may pass sparse constraint systems.
pub fn nullspace_of_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Subspace {
    let mut rows: Vec<Vec<Rational>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    let pivots = reduce_rows(&mut rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                if !row[free].is_zero() {
                    v[p] = -row[free].clone();
                }
            }
            v
        })
        .collect();
    Subspace::span(cols, vectors).expect("nullspace vectors have the column dimension")
}

/// Span equality via identical RREF bases.
pub fn equal_span(a: &Subspace, b: &Subspace) -> Result<bool> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "subspaces of Q^{} and Q^{}",
            a.ambient_dim, b.ambient_dim
        )));
    }
    Ok(a.basis == b.basis)
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_identity() {
        let (r, p) = rref(&Matrix::identity(3));
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero() {
        let (r, p) = rref(&Matrix::zeros(2, 3));
        assert_eq!(r, Matrix::zeros(2, 3));
        assert!(p.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = rref(&Matrix::from_i64(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&Matrix::identity(2)).dim(), 0);

        let ns = nullspace(&Matrix::zeros(2, 3));
        assert_eq!(ns.dim(), 3);
        assert_eq!(ns.basis(), Matrix::identity(3).to_rows().as_slice());

        let ns = nullspace(&Matrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(ns.basis(), &[vec![int(1), rat(-1, 2)]]);
    }

    #[test]
    fn equal_span_examples() {
        let s = |rows: Vec<Vec<i64>>| {
            Subspace::span(
                2,
                rows.into_iter()
                    .map(|r| r.into_iter().map(int).collect())
                    .collect(),
            )
            .unwrap()
        };
        assert!(equal_span(&s(vec![vec![1, 0]]), &s(vec![vec![2, 0]])).unwrap());
        assert!(!equal_span(&s(vec![vec![1, 0]]), &s(vec![vec![0, 1]])).unwrap());
        assert!(equal_span(&s(vec![vec![1, 1], vec![1, -1]]), &Subspace::full(2)).unwrap());
        assert!(matches!(
            equal_span(&Subspace::zero(2), &Subspace::zero(3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn rational_text_round_trip() {
        assert_eq!(format_rational(&rat(-3, 6)), "-1/2");
        assert_eq!(format_rational(&int(4)), "4");
        assert_eq!(parse_rational(" 6/-4 ").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(checked_inverse(&int(0)).is_none());
        assert_eq!(checked_inverse(&rat(2, 3)).unwrap(), rat(3, 2));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec((-3i64..=3, 1i64..=3), r * c).prop_map(move |xs| {
                let rows = xs
                    .chunks(c)
                    .map(|ch| ch.iter().map(|&(p, q)| rat(p, q)).collect())
                    .collect();
                Matrix::from_rows(c, rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn nullspace_vectors_are_annihilated(m in small_matrix()) {
            let ns = nullspace(&m);
            for v in ns.basis() {
                prop_assert!(is_zero_vector(&m.mul_vec(v).unwrap()));
            }
            prop_assert_eq!(m.rank() + ns.dim(), m.cols());
        }

        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let (once, p1) = rref(&m);
            let (twice, p2) = rref(&once);
            prop_assert_eq!(once, twice);
            prop_assert_eq!(p1, p2);
        }

        #[test]
        fn span_is_row_order_independent(m in small_matrix()) {
            let mut rows = m.to_rows();
            let a = Subspace::span(m.cols(), rows.clone()).unwrap();
            rows.reverse();
            let b = Subspace::span(m.cols(), rows).unwrap();
            prop_assert!(equal_span(&a, &b).unwrap());
        }

        #[test]
        fn arithmetic_is_exact(a in (-50i64..50, 1i64..50), b in (-50i64..50, 1i64..50)) {
            let (a, b) = (rat(a.0, a.1), rat(b.0, b.1));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a * &b) * b.recip(), a);
            }
        }
    }
}
