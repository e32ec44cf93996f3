//! Parallelohedra: Venkov's conditions, belts, facet vectors and the lattice
//! of tile centers.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::exact::{integer_span_basis, rank_of, Matrix, Scalar, Vector};
use crate::lattice::Lattice;
use crate::polytope::Polytope;
use crate::{Error, Result, Rational};

mod dual;

pub use dual::{Census, DelonePattern, DelonType, DualCell, Irreducibility};

/// Why a polytope fails Venkov's conditions. Indices refer to the recentered polytope,
/// which has the same vertex, facet and face numbering as the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VenkovWitness {
    NotCentrallySymmetric,
    FacetNotCentrallySymmetric { facet: usize },
    BeltLength { ridge: usize, length: usize },
    BeltNotAntipodal { ridge: usize },
    NeighborMismatch { facet: usize },
}

impl fmt::Display for VenkovWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VenkovWitness::NotCentrallySymmetric => write!(f, "polytope is not centrally symmetric"),
            VenkovWitness::FacetNotCentrallySymmetric { facet } => {
                write!(f, "facet {facet} is not centrally symmetric")
            }
            VenkovWitness::BeltLength { ridge, length } => {
                write!(f, "belt through ridge {ridge} has length {length}")
            }
            VenkovWitness::BeltNotAntipodal { ridge } => {
                write!(f, "belt through ridge {ridge} does not pair opposite facets")
            }
            VenkovWitness::NeighborMismatch { facet } => {
                write!(f, "translate across facet {facet} does not meet P in that facet")
            }
        }
    }
}

/// Outcome of Venkov's test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VenkovVerdict {
    Pass,
    Fail(VenkovWitness),
}

/// Cyclic sequence of facets around a class of parallel ridges.
///
/// `ridges[i]` joins `facets[i]` and `facets[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Belt {
    pub facets: Vec<usize>,
    pub ridges: Vec<usize>,
}

impl Belt {
    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_primitive(&self) -> bool {
        self.len() == 6
    }
}

#[derive(Clone, Debug)]
pub struct Parallelohedron<T = Rational> {
    polytope: Polytope<T>,
    opposite: Vec<usize>,
    facet_vectors: Vec<Vector<T>>,
    belts: Vec<Belt>,
    ridge_belt: HashMap<usize, usize>,
    lattice_basis: Vec<Vector<T>>,
    /// Lattice vectors within twice the circumradius, sorted.
    star: Vec<Vector<T>>,
}

/// Run Venkov's test without keeping the analysis.
pub fn venkov_check<T: Scalar>(p: &Polytope<T>) -> Result<VenkovVerdict> {
    match Parallelohedron::new(p) {
        Ok(_) => Ok(VenkovVerdict::Pass),
        Err(Error::NotParallelohedron(w)) => Ok(VenkovVerdict::Fail(w)),
        Err(e) => Err(e),
    }
}

impl<T: Scalar> Parallelohedron<T> {
    /// Recenter `p` and verify Venkov's conditions.
    pub fn new(p: &Polytope<T>) -> Result<Self> {
        let d = p.dim();
        if d < 2 {
            return Err(Error::UnsupportedDimension {
                dim: d,
                reason: "parallelohedron analysis needs d >= 2",
            });
        }
        let fail = |w| Err(Error::NotParallelohedron(w));
        let polytope = p.recentered();
        match polytope.symmetry_center() {
            Some(c) if c.is_zero() => {}
            _ => return fail(VenkovWitness::NotCentrallySymmetric),
        }
        let lattice = polytope.face_lattice();
        let mut opposite = Vec::with_capacity(polytope.facets().len());
        let mut facet_vectors = Vec::with_capacity(polytope.facets().len());
        for (i, f) in polytope.facets().iter().enumerate() {
            let face = lattice.facet_face(i);
            if polytope.face_symmetry_center(face).is_none() {
                return fail(VenkovWitness::FacetNotCentrallySymmetric { facet: i });
            }
            let opp = polytope
                .facet_by_normal(&-&f.normal)
                .expect("centrally symmetric polytope has opposite facets");
            opposite.push(opp);
            let t = lattice.face(face).center.scale(&T::two());
            // P and P + t must meet exactly in F: F - t lies in P
            if !f.vertices.iter().all(|&v| polytope.contains(&(polytope.vertex(v) - &t))) {
                return fail(VenkovWitness::NeighborMismatch { facet: i });
            }
            facet_vectors.push(t);
        }

        let mut belts = Vec::new();
        let mut ridge_belt = HashMap::new();
        for &r in polytope.ridges() {
            if ridge_belt.contains_key(&r) {
                continue;
            }
            let belt = match walk_belt(&polytope, r) {
                Some(b) => b,
                None => {
                    return fail(VenkovWitness::BeltLength {
                        ridge: r,
                        length: 0,
                    })
                }
            };
            let len = belt.len();
            if len != 4 && len != 6 {
                return fail(VenkovWitness::BeltLength { ridge: r, length: len });
            }
            let half = len / 2;
            if (0..len).any(|i| belt.facets[(i + half) % len] != opposite[belt.facets[i]]) {
                return fail(VenkovWitness::BeltNotAntipodal { ridge: r });
            }
            for &rr in &belt.ridges {
                ridge_belt.insert(rr, belts.len());
            }
            belts.push(belt);
        }

        let lattice_basis = integer_span_basis(&facet_vectors);
        if lattice_basis.len() != d || rank_of(&lattice_basis) != d {
            return Err(Error::InputCorruption(
                "facet vectors do not span a full-rank lattice".into(),
            ));
        }
        let euclid = Lattice::euclidean(Matrix::from_row_vectors(&lattice_basis)?)?;
        let radius = polytope.circumradius_squared() * T::from_i64(4);
        let star = euclid.vectors_within(&Vector::zeros(d), &radius);

        Ok(Parallelohedron {
            polytope,
            opposite,
            facet_vectors,
            belts,
            ridge_belt,
            lattice_basis,
            star,
        })
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    /// The recentered polytope.
    pub fn polytope(&self) -> &Polytope<T> {
        &self.polytope
    }

    pub fn opposite(&self, facet: usize) -> usize {
        self.opposite[facet]
    }

    /// `t_F = 2 · center(F)`: the translate `P + t_F` is the neighbor across `F`.
    pub fn facet_vector(&self, facet: usize) -> &Vector<T> {
        &self.facet_vectors[facet]
    }

    pub fn facet_vectors(&self) -> &[Vector<T>] {
        &self.facet_vectors
    }

    /// Facet whose facet vector is `t`, if any.
    pub fn facet_with_vector(&self, t: &Vector<T>) -> Option<usize> {
        self.facet_vectors.iter().position(|v| v == t)
    }

    pub fn belts(&self) -> &[Belt] {
        &self.belts
    }

    /// Index of the belt containing a ridge (given as a face index).
    pub fn belt_of(&self, ridge: usize) -> Option<usize> {
        self.ridge_belt.get(&ridge).copied()
    }

    /// A ridge is primitive iff it lies in three tiles, i.e. its belt has length 6.
    pub fn ridge_primitive(&self, ridge: usize) -> bool {
        self.belt_of(ridge).is_some_and(|b| self.belts[b].is_primitive())
    }

    /// The two facets containing a ridge, in increasing order.
    pub fn ridge_facets(&self, ridge: usize) -> (usize, usize) {
        let fs = &self.polytope.face(ridge).facets;
        (fs[0], fs[1])
    }

    /// A basis of the lattice `Λ(P)` generated by the facet vectors.
    pub fn lattice_basis(&self) -> &[Vector<T>] {
        &self.lattice_basis
    }

    /// `Λ(P)` with the given metric.
    pub fn lattice(&self, gram: Matrix<T>) -> Result<Lattice<T>> {
        Lattice::new(Matrix::from_row_vectors(&self.lattice_basis)?, gram)
    }

    /// Lattice vectors that can be centers of tiles meeting `P`.
    pub fn star_vectors(&self) -> &[Vector<T>] {
        &self.star
    }

    pub fn ridge_count(&self) -> usize {
        self.polytope.ridges().len()
    }
}

/// Follow the belt through `start`: in each facet step to the opposite ridge,
/// then cross to the other facet of that ridge. `None` if a reflected ridge is
/// not a face (cannot happen once facets are centrally symmetric).
fn walk_belt<T: Scalar>(p: &Polytope<T>, start: usize) -> Option<Belt> {
    let lattice = p.face_lattice();
    let first = lattice.face(start).facets[0];
    let mut facets = Vec::new();
    let mut ridges = Vec::new();
    let mut facet = first;
    let mut entering = start;
    for _ in 0..=p.facets().len() {
        facets.push(facet);
        let two_c = lattice.face(lattice.facet_face(facet)).center.scale(&T::two());
        let reflected: Vec<usize> = lattice
            .face(entering)
            .vertices
            .iter()
            .map(|&v| p.vertex_index(&(&two_c - p.vertex(v))))
            .collect::<Option<Vec<_>>>()?
            .into_iter()
            .sorted()
            .collect();
        let exit = lattice.find(&reflected)?;
        ridges.push(exit);
        let next = *lattice.face(exit).facets.iter().find(|&&g| g != facet)?;
        if exit == start {
            // `next` must be the facet we started in
            return (next == first).then_some(Belt { facets, ridges });
        }
        facet = next;
        entering = exit;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{RatPolytope, RatVector};

    fn cube() -> RatPolytope {
        let pts = (0..8)
            .map(|m: i64| RatVector::from_i64(&[m & 1, (m >> 1) & 1, (m >> 2) & 1]))
            .collect();
        RatPolytope::from_vertices(pts).unwrap()
    }

    fn octahedron() -> RatPolytope {
        let mut pts = Vec::new();
        for i in 0..3 {
            pts.push(RatVector::unit(3, i));
            pts.push(-RatVector::unit(3, i));
        }
        RatPolytope::from_vertices(pts).unwrap()
    }

    #[test]
    fn cube_is_a_parallelohedron() {
        let p = Parallelohedron::new(&cube()).unwrap();
        assert_eq!(p.belts().len(), 3);
        assert!(p.belts().iter().all(|b| b.len() == 4));
        assert!(p.polytope().ridges().iter().all(|&r| !p.ridge_primitive(r)));
        for (i, t) in p.facet_vectors().iter().enumerate() {
            assert_eq!(p.facet_vector(p.opposite(i)), &-t);
            assert_eq!(t.norm_squared(), Rational::from_i64(1));
        }
        assert_eq!(p.lattice_basis().len(), 3);
        assert!(p.polytope().centroid().is_zero());
    }

    #[test]
    fn octahedron_fails_on_a_facet() {
        match venkov_check(&octahedron()).unwrap() {
            VenkovVerdict::Fail(VenkovWitness::FacetNotCentrallySymmetric { .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn triangle_is_not_symmetric() {
        let tri = RatPolytope::from_vertices(vec![
            RatVector::from_i64(&[0, 0]),
            RatVector::from_i64(&[1, 0]),
            RatVector::from_i64(&[0, 1]),
        ])
        .unwrap();
        assert_eq!(
            venkov_check(&tri).unwrap(),
            VenkovVerdict::Fail(VenkovWitness::NotCentrallySymmetric)
        );
    }

    #[test]
    fn octagon_has_a_long_belt() {
        // centrally symmetric octagon with integer vertices
        let pts = [[2, 1], [1, 2], [-1, 2], [-2, 1], [-2, -1], [-1, -2], [1, -2], [2, -1]]
            .iter()
            .map(|c| RatVector::from_i64(c))
            .collect();
        let p = RatPolytope::from_vertices(pts).unwrap();
        assert!(matches!(
            venkov_check(&p).unwrap(),
            VenkovVerdict::Fail(VenkovWitness::BeltLength { length: 8, .. })
        ));
    }

    #[test]
    fn hexagon_belt_is_primitive() {
        let pts = [[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1], [1, -1]]
            .iter()
            .map(|c| RatVector::from_i64(c))
            .collect();
        let p = Parallelohedron::new(&RatPolytope::from_vertices(pts).unwrap()).unwrap();
        assert_eq!(p.belts().len(), 1);
        assert_eq!(p.belts()[0].len(), 6);
        assert!(p.polytope().ridges().iter().all(|&r| p.ridge_primitive(r)));
    }
}
