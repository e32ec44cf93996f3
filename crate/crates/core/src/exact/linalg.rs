//! Exact linear algebra: row reduction, kernels, linear systems, definiteness
//! and integer spans.

use num_traits::{One, Signed};

use super::{Matrix, Scalar, Vector};
use crate::{Error, Result};

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<T> {
    pub matrix: Matrix<T>,
    pub pivots: Vec<usize>,
}

pub fn rref<T: Scalar>(a: &Matrix<T>) -> Rref<T> {
    let mut m = a.to_rows();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let delta = factor.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        matrix: Matrix::from_rows(&m).expect("rref keeps shape"),
        pivots,
    }
}

pub fn rank<T: Scalar>(a: &Matrix<T>) -> usize {
    rref(a).pivots.len()
}

/// Rank of a list of vectors (zero for an empty list).
pub fn rank_of<T: Scalar>(vectors: &[Vector<T>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&Matrix::from_row_vectors(vectors).expect("vectors of equal length"))
}

/// Affine rank of a point set: the dimension of its affine hull (-1 is reported as 0 for empty input).
pub fn affine_rank<T: Scalar>(points: &[Vector<T>]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vector<T>> = points[1..].iter().map(|p| p - base).collect();
    rank_of(&diffs)
}

pub fn determinant<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "determinant of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut m = a.to_rows();
    let mut det = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Ok(T::zero());
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det = det * pivot.clone();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone() / pivot.clone();
            for j in c..n {
                let delta = factor.clone() * m[c][j].clone();
                m[i][j] = m[i][j].clone() - delta;
            }
        }
    }
    Ok(det)
}

pub fn inverse<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    let n = a.rows();
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n + i, T::one());
    }
    let red = rref(&aug);
    if red.pivots.len() < n || red.pivots[n - 1] >= n {
        return Err(Error::Singular);
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, red.matrix.get(i, n + j).clone());
        }
    }
    Ok(inv)
}

/// Basis of the kernel `{x : A x = 0}`.
///
/// One vector per free column, in column order, each normalized to coprime
/// integer entries with a positive leading entry. Empty when the kernel is trivial.
pub fn nullspace<T: Scalar>(a: &Matrix<T>) -> Vec<Vector<T>> {
    let red = rref(a);
    kernel_from_rref(&red, a.cols())
}

fn kernel_from_rref<T: Scalar>(red: &Rref<T>, cols: usize) -> Vec<Vector<T>> {
    let free = (0..cols).filter(|c| !red.pivots.contains(c));
    free.map(|f| {
        let mut v = Vector::zeros(cols);
        v.0[f] = T::one();
        for (r, &p) in red.pivots.iter().enumerate() {
            v.0[p] = -red.matrix.get(r, f).clone();
        }
        v.canonical_direction()
    })
    .collect()
}

/// A consistent linear system: one particular solution plus a kernel basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSolution<T> {
    /// Solution with every free variable set to zero.
    pub particular: Vector<T>,
    pub kernel: Vec<Vector<T>>,
}

/// Solve `A x = b` exactly. `Ok(None)` means the system is inconsistent.
pub fn solve_linear<T: Scalar>(a: &Matrix<T>, b: &Vector<T>) -> Result<Option<LinearSolution<T>>> {
    if a.rows() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} system with right-hand side of length {}",
            a.rows(),
            a.cols(),
            b.dim()
        )));
    }
    let (rows, cols) = (a.rows(), a.cols());
    let mut aug = Matrix::zeros(rows, cols + 1);
    for i in 0..rows {
        for j in 0..cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, cols, b[i].clone());
    }
    let red = rref(&aug);
    if red.pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut particular = Vector::zeros(cols);
    for (r, &p) in red.pivots.iter().enumerate() {
        particular.0[p] = red.matrix.get(r, cols).clone();
    }
    let coefficient_part = Rref {
        matrix: red.matrix,
        pivots: red.pivots,
    };
    Ok(Some(LinearSolution {
        particular,
        kernel: kernel_from_rref(&coefficient_part, cols),
    }))
}

/// Leading principal minors of a square matrix, smallest first.
pub fn leading_minors<T: Scalar>(s: &Matrix<T>) -> Result<Vec<T>> {
    if !s.is_square() {
        return Err(Error::DimensionMismatch("minors of a non-square matrix".into()));
    }
    (1..=s.rows()).map(|k| determinant(&s.leading(k))).collect()
}

/// Sylvester's criterion, evaluated exactly.
pub fn is_positive_definite<T: Scalar>(s: &Matrix<T>) -> Result<bool> {
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(leading_minors(s)?.iter().all(Signed::is_positive))
}

/// A basis of the Z-module spanned by rational generators.
///
/// Generators are scaled to integers, brought to Hermite-style echelon form by
/// unimodular row operations, and scaled back. Rows come out in echelon order.
pub fn integer_span_basis<T: Scalar>(generators: &[Vector<T>]) -> Vec<Vector<T>> {
    let Some(first) = generators.first() else {
        return Vec::new();
    };
    let n = first.dim();
    let denom = generators
        .iter()
        .flat_map(|g| g.iter())
        .fold(T::Int::one(), |acc, x| num_integer::Integer::lcm(&acc, &x.denom_int()));
    let scale = T::from_int(denom);
    let mut rows: Vec<Vec<T>> = generators
        .iter()
        .map(|g| g.scale(&scale).0)
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut top = 0;
    for c in 0..n {
        loop {
            // smallest nonzero |entry| in column c among rows[top..]
            let pick = (top..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&i, &j| rows[i][c].abs().cmp(&rows[j][c].abs()));
            let Some(p) = pick else { break };
            rows.swap(top, p);
            let mut done = true;
            for i in top + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = (rows[i][c].clone() / rows[top][c].clone()).floor();
                for j in 0..n {
                    let delta = q.clone() * rows[top][j].clone();
                    rows[i][j] = rows[i][j].clone() - delta;
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top < rows.len() && !rows[top][c].is_zero() {
            if rows[top][c].is_negative() {
                for x in rows[top].iter_mut() {
                    *x = -x.clone();
                }
            }
            top += 1;
        }
    }
    rows.truncate(top);
    let inv = T::one() / scale;
    rows.into_iter().map(|r| Vector(r).scale(&inv)).collect()
}

/// Express `v` in terms of the rows of `basis`, if possible.
pub fn coordinates<T: Scalar>(basis: &[Vector<T>], v: &Vector<T>) -> Result<Option<Vector<T>>> {
    let a = Matrix::from_columns(basis)?;
    Ok(solve_linear(&a, v)?.map(|s| s.particular))
}
