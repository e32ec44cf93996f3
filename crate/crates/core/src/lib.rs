//! Exact-arithmetic analysis of parallelohedra.
//!
//! Given a convex polytope this crate decides whether it tiles space by
//! translations (Venkov's conditions), computes its belts, dual cells and
//! primitivity, builds the gain function on primitive ridges, and tries to
//! turn a consistent gain function into a canonical scaling and then into a
//! positive-definite quadratic form whose Dirichlet–Voronoi cell is the input
//! polytope. It also reports the topology of the surface that remains after
//! the non-primitive ridges are cut out.
//!
//! All geometry is generic over an exact [`Scalar`]; the aliases below fix the
//! usual choice of arbitrary-precision rationals.

pub mod catalog;
pub mod exact;
pub mod lattice;
pub mod parallelohedron;
pub mod polytope;
pub mod report;
pub mod scaling;
pub mod topology;

mod error;

pub use error::{Error, Result};
pub use exact::{Matrix, Scalar, Vector};
pub use lattice::Lattice;
pub use parallelohedron::Parallelohedron;
pub use polytope::Polytope;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;
pub type RatVector = Vector<Rational>;
pub type RatMatrix = Matrix<Rational>;
pub type RatPolytope = Polytope<Rational>;
pub type RatLattice = Lattice<Rational>;
