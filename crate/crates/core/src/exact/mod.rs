//! Exact scalars, vectors, matrices and the linear-algebra kernel.
//!
//! Nothing here touches floating point. Everything is generic over
//! [`Scalar`]; the crate root fixes the usual instantiation to `BigRational`.

mod linalg;
mod matrix;
mod scalar;
mod vector;

pub use linalg::{
    affine_rank, coordinates, determinant, integer_span_basis, inverse, is_positive_definite,
    leading_minors, nullspace, rank, rank_of, rref, solve_linear, LinearSolution, Rref,
};
pub use matrix::Matrix;
pub use scalar::{floor_sqrt, has_terminating_decimal, parse_scalar, to_decimal, Scalar};
pub use vector::{centroid, Vector};
