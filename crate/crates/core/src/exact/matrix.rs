use std::fmt;
use std::ops::Index;

use num_traits::Zero;

use super::{Scalar, Vector};
use crate::{Error, Result};

/// Dense row-major matrix of exact scalars.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    /// Build from rows; all rows must have the same length.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    pub fn from_row_vectors(rows: &[Vector<T>]) -> Result<Self> {
        let rows: Vec<Vec<T>> = rows.iter().map(|r| r.0.clone()).collect();
        Self::from_rows(&rows)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector<T>]) -> Result<Self> {
        Ok(Self::from_row_vectors(cols)?.transpose())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<T>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| T::from_i64(x)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> Vector<T> {
        Vector(self.row(i).to_vec())
    }

    pub fn row_vectors(&self) -> Vec<Vector<T>> {
        (0..self.rows).map(|i| self.row_vector(i)).collect()
    }

    pub fn column(&self, j: usize) -> Vector<T> {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(i, k).clone() * rhs.get(k, j).clone();
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector<T>) -> Result<Vector<T>> {
        if self.cols != v.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        Ok(Vector(
            (0..self.rows)
                .map(|i| Vector(self.row(i).to_vec()).dot(v))
                .collect(),
        ))
    }

    /// `xᵀ M y` for a square matrix.
    pub fn bilinear(&self, x: &Vector<T>, y: &Vector<T>) -> T {
        let my = self.mul_vec(y).expect("bilinear form dimension");
        x.dot(&my)
    }

    pub fn scale(&self, k: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * k.clone()).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    /// Positive multiple with coprime integer entries (zero maps to zero).
    pub fn primitive(&self) -> Self {
        let v = Vector(self.data.clone()).primitive();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: v.0,
        }
    }

    /// Leading principal submatrix of order `k`.
    pub fn leading(&self, k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{RatMatrix, RatVector, Rational};

    #[test]
    fn products_and_transpose() {
        let a = RatMatrix::from_i64(&[&[1, 2], &[3, 4], &[5, 6]]).unwrap();
        let b = RatMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(
            ab,
            RatMatrix::from_i64(&[&[1, 2, 3], &[3, 4, 7], &[5, 6, 11]]).unwrap()
        );
        assert_eq!(a.transpose().transpose(), a);
        assert!(a.mul(&a).is_err());
        let v = RatVector::from_i64(&[1, -1]);
        assert_eq!(a.mul_vec(&v).unwrap(), RatVector::from_i64(&[-1, -1, -1]));
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![Rational::from_i64(1)], vec![]];
        assert!(RatMatrix::from_rows(&rows).is_err());
        assert!(RatMatrix::new(2, 2, vec![Rational::from_i64(1)]).is_err());
    }

    #[test]
    fn symmetry_and_primitive() {
        let s = RatMatrix::from_i64(&[&[2, 1], &[1, 2]]).unwrap();
        assert!(s.is_symmetric());
        assert!(!RatMatrix::from_i64(&[&[1, 2], &[3, 4]]).unwrap().is_symmetric());
        assert_eq!(s.scale(&Rational::from_frac(1, 3)).primitive(), s);
        assert!(RatMatrix::identity(3).is_identity());
    }
}
