//! Full-dimensional convex polytopes in both vertex and halfspace form.
//!
//! Conversion between the two descriptions is brute force over `d`-subsets,
//! which is fine for the desk-scale inputs this crate targets (`d <= 6`, a few
//! dozen facets). Facet normals are always the primitive integer outward
//! normal of the facet hyperplane, and vertices and facets are kept in
//! lexicographic order so that every derived index is reproducible.

mod faces;
pub mod io;

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::exact::{affine_rank, centroid, determinant, nullspace, rank_of, solve_linear, Matrix, Scalar, Vector};
use crate::{Error, Rational, Result};

pub use faces::{Face, FaceLattice};
#[allow(unused_imports)]
pub(crate) use faces::is_sorted_subset;

/// Largest ambient dimension accepted.
pub const MAX_DIM: usize = 6;

/// A facet `⟨normal, x⟩ <= offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet<T> {
    /// Primitive integer outward normal.
    pub normal: Vector<T>,
    pub offset: T,
    /// Sorted indices of the vertices on the facet.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Polytope<T = Rational> {
    dim: usize,
    vertices: Vec<Vector<T>>,
    facets: Vec<Facet<T>>,
    faces: FaceLattice<T>,
}

impl<T: Scalar> Polytope<T> {
    /// Convex hull of a finite point set. Non-extreme and repeated points are discarded.
    pub fn from_vertices(points: Vec<Vector<T>>) -> Result<Self> {
        let dim = check_dims(points.iter().map(Vector::dim))?;
        let mut points = points;
        points.sort();
        points.dedup();
        let found = affine_rank(&points);
        if found < dim {
            return Err(Error::NotFullDimensional { dim, found });
        }

        let mut hyperplanes: BTreeMap<Vector<T>, T> = BTreeMap::new();
        for combo in (0..points.len()).combinations(dim) {
            let Some((normal, offset)) = hyperplane_through(&combo.iter().map(|&i| &points[i]).collect::<Vec<_>>()) else {
                continue;
            };
            if hyperplanes.get(&normal) == Some(&offset)
                || hyperplanes.get(&(-&normal)) == Some(&(-offset.clone()))
            {
                continue;
            }
            let mut above = false;
            let mut below = false;
            for p in &points {
                let s = normal.dot(p) - offset.clone();
                above |= s.is_positive();
                below |= s.is_negative();
                if above && below {
                    break;
                }
            }
            match (above, below) {
                (false, _) => {
                    hyperplanes.insert(normal, offset);
                }
                (true, false) => {
                    hyperplanes.insert(-&normal, -offset);
                }
                _ => {}
            }
        }

        // keep only points that are vertices: tight normals of full rank
        let vertices: Vec<Vector<T>> = points
            .into_iter()
            .filter(|p| {
                let tight: Vec<Vector<T>> = hyperplanes
                    .iter()
                    .filter(|(n, b)| n.dot(p) == **b)
                    .map(|(n, _)| n.clone())
                    .collect();
                tight.len() >= dim && rank_of(&tight) == dim
            })
            .collect();

        let facets: Vec<Facet<T>> = hyperplanes
            .into_iter()
            .map(|(normal, offset)| {
                let on: Vec<usize> = vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| normal.dot(v) == offset)
                    .map(|(i, _)| i)
                    .collect();
                Facet {
                    normal,
                    offset,
                    vertices: on,
                }
            })
            .collect();

        Ok(Self::assemble(dim, vertices, facets))
    }

    /// Intersection of halfspaces `⟨normal, x⟩ <= offset`. Redundant inequalities are dropped.
    pub fn from_halfspaces(halfspaces: Vec<(Vector<T>, T)>) -> Result<Self> {
        let dim = check_dims(halfspaces.iter().map(|(n, _)| n.dim()))?;
        let mut canonical: BTreeMap<Vector<T>, T> = BTreeMap::new();
        for (normal, offset) in halfspaces {
            if normal.is_zero() {
                if offset.is_negative() {
                    return Err(Error::Empty);
                }
                continue;
            }
            let prim = normal.primitive();
            let k = prim.ratio_to(&normal).expect("primitive is parallel");
            let off = offset / k;
            canonical
                .entry(prim)
                .and_modify(|b| {
                    if off < *b {
                        *b = off.clone();
                    }
                })
                .or_insert(off);
        }
        let hs: Vec<(Vector<T>, T)> = canonical.into_iter().collect();
        let normals: Vec<Vector<T>> = hs.iter().map(|(n, _)| n.clone()).collect();
        if rank_of(&normals) < dim {
            return Err(Error::Unbounded);
        }

        // the recession cone {y : n.y <= 0} is pointed, so it is nontrivial
        // iff it has an extreme ray cut out by dim - 1 independent normals
        for combo in (0..normals.len()).combinations(dim - 1) {
            let rows: Vec<Vector<T>> = combo.iter().map(|&i| normals[i].clone()).collect();
            let kernel = if rows.is_empty() {
                vec![Vector::unit(dim, 0)]
            } else {
                nullspace(&Matrix::from_row_vectors(&rows)?)
            };
            if kernel.len() != 1 {
                continue;
            }
            let y = &kernel[0];
            let signs: Vec<T> = normals.iter().map(|n| n.dot(y)).collect();
            if signs.iter().all(|s| !s.is_positive()) || signs.iter().all(|s| !s.is_negative()) {
                return Err(Error::Unbounded);
            }
        }

        let vertices = enumerate_vertices(dim, &hs)?;
        if vertices.is_empty() {
            return Err(Error::Empty);
        }
        let found = affine_rank(&vertices);
        if found < dim {
            return Err(Error::NotFullDimensional { dim, found });
        }

        // bounded, so the region is the hull of its vertices and its facets
        // are the constraints whose tight vertices span a hyperplane
        let facets: Vec<Facet<T>> = hs
            .into_iter()
            .filter_map(|(normal, offset)| {
                let on: Vec<usize> = vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| normal.dot(v) == offset)
                    .map(|(i, _)| i)
                    .collect();
                let pts: Vec<Vector<T>> = on.iter().map(|&i| vertices[i].clone()).collect();
                (on.len() >= dim && affine_rank(&pts) == dim - 1).then_some(Facet {
                    normal,
                    offset,
                    vertices: on,
                })
            })
            .collect();
        Ok(Self::assemble(dim, vertices, facets))
    }

    fn assemble(dim: usize, vertices: Vec<Vector<T>>, facets: Vec<Facet<T>>) -> Self {
        let facet_vertices: Vec<Vec<usize>> = facets.iter().map(|f| f.vertices.clone()).collect();
        let faces = FaceLattice::build(dim, &vertices, &facet_vertices);
        Polytope {
            dim,
            vertices,
            facets,
            faces,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector<T>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vector<T> {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, point: &Vector<T>) -> Option<usize> {
        self.vertices.binary_search(point).ok()
    }

    pub fn facets(&self) -> &[Facet<T>] {
        &self.facets
    }

    pub fn facet(&self, i: usize) -> &Facet<T> {
        &self.facets[i]
    }

    /// Facet with the given canonical normal.
    pub fn facet_by_normal(&self, normal: &Vector<T>) -> Option<usize> {
        self.facets
            .binary_search_by(|f| f.normal.cmp(normal))
            .ok()
    }

    pub fn face_lattice(&self) -> &FaceLattice<T> {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face<T> {
        self.faces.face(i)
    }

    /// Points of a face as coordinates.
    pub fn face_points(&self, face: usize) -> Vec<Vector<T>> {
        self.faces
            .face(face)
            .vertices
            .iter()
            .map(|&i| self.vertices[i].clone())
            .collect()
    }

    /// Face indices of the `(d-2)`-faces.
    pub fn ridges(&self) -> &[usize] {
        if self.dim < 2 {
            return &[];
        }
        self.faces.of_dim(self.dim - 2)
    }

    /// Centroid of the vertices.
    pub fn centroid(&self) -> Vector<T> {
        centroid(self.vertices.iter())
    }

    pub fn contains(&self, x: &Vector<T>) -> bool {
        self.facets.iter().all(|f| f.normal.dot(x) <= f.offset)
    }

    pub fn contains_in_interior(&self, x: &Vector<T>) -> bool {
        self.facets.iter().all(|f| f.normal.dot(x) < f.offset)
    }

    /// Largest squared Euclidean distance from the origin to a vertex.
    pub fn circumradius_squared(&self) -> T {
        self.vertices
            .iter()
            .map(Vector::norm_squared)
            .max()
            .unwrap_or_else(T::zero)
    }

    /// Center of point symmetry of the whole vertex set, if any.
    pub fn symmetry_center(&self) -> Option<Vector<T>> {
        central_symmetry_center(&self.vertices)
    }

    /// Center of point symmetry of a face, if any.
    pub fn face_symmetry_center(&self, face: usize) -> Option<Vector<T>> {
        central_symmetry_center(&self.face_points(face))
    }

    /// Image under `x ↦ A x + shift`; normals are recomputed from the mapped vertices.
    pub fn apply_affine(&self, a: &Matrix<T>, shift: &Vector<T>) -> Result<Self> {
        if !a.is_square() || a.rows() != self.dim || shift.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "affine map {}x{} + shift of length {} on a {}-polytope",
                a.rows(),
                a.cols(),
                shift.dim(),
                self.dim
            )));
        }
        if determinant(a)?.is_zero() {
            return Err(Error::Singular);
        }
        let mapped = self
            .vertices
            .iter()
            .map(|v| Ok(&a.mul_vec(v)? + shift))
            .collect::<Result<Vec<_>>>()?;
        Self::from_vertices(mapped)
    }

    /// Translate so that the vertex centroid is the origin.
    pub fn recentered(&self) -> Self {
        let c = self.centroid();
        if c.is_zero() {
            return self.clone();
        }
        let shift = -&c;
        let vertices: Vec<Vector<T>> = self.vertices.iter().map(|v| v + &shift).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| Facet {
                normal: f.normal.clone(),
                offset: f.offset.clone() + f.normal.dot(&shift),
                vertices: f.vertices.clone(),
            })
            .collect();
        // translation keeps vertex order and normals
        Self::assemble(self.dim, vertices, facets)
    }
}

/// If `points` is invariant under `x ↦ 2c − x` for its centroid `c`, return `c`.
pub fn central_symmetry_center<T: Scalar>(points: &[Vector<T>]) -> Option<Vector<T>> {
    if points.is_empty() {
        return None;
    }
    let c = centroid(points.iter());
    let two_c = c.scale(&T::two());
    let mut sorted: Vec<&Vector<T>> = points.iter().collect();
    sorted.sort();
    let mut reflected: Vec<Vector<T>> = points.iter().map(|p| &two_c - p).collect();
    reflected.sort();
    sorted
        .iter()
        .zip(&reflected)
        .all(|(a, b)| *a == b)
        .then_some(c)
}

/// Canonical hyperplane `(n, b)` through `d` affinely independent points in `R^d`.
fn hyperplane_through<T: Scalar>(points: &[&Vector<T>]) -> Option<(Vector<T>, T)> {
    let d = points[0].dim();
    let rows: Vec<Vec<T>> = points
        .iter()
        .map(|p| {
            let mut r = p.0.clone();
            r.push(-T::one());
            r
        })
        .collect();
    let kernel = nullspace(&Matrix::from_rows(&rows).ok()?);
    if kernel.len() != 1 {
        return None;
    }
    let k = &kernel[0];
    let normal = Vector(k.0[..d].to_vec());
    if normal.is_zero() {
        return None;
    }
    let prim = normal.primitive();
    let scale = normal.ratio_to(&prim)?;
    Some((prim, k.0[d].clone() * scale))
}

/// Vertices of `{x : n.x <= b}` found by solving every `dim`-subset of constraints.
fn enumerate_vertices<T: Scalar>(dim: usize, hs: &[(Vector<T>, T)]) -> Result<Vec<Vector<T>>> {
    let mut vertices: Vec<Vector<T>> = Vec::new();
    for combo in (0..hs.len()).combinations(dim) {
        let rows: Vec<Vector<T>> = combo.iter().map(|&i| hs[i].0.clone()).collect();
        let a = Matrix::from_row_vectors(&rows)?;
        if determinant(&a)?.is_zero() {
            continue;
        }
        let b = Vector(combo.iter().map(|&i| hs[i].1.clone()).collect());
        let x = solve_linear(&a, &b)?
            .expect("nonsingular system is consistent")
            .particular;
        if hs.iter().all(|(n, off)| n.dot(&x) <= *off) {
            vertices.push(x);
        }
    }
    vertices.sort();
    vertices.dedup();
    Ok(vertices)
}

fn check_dims(mut dims: impl Iterator<Item = usize>) -> Result<usize> {
    let Some(dim) = dims.next() else {
        return Err(Error::Empty);
    };
    if dims.any(|d| d != dim) {
        return Err(Error::DimensionMismatch("points of different lengths".into()));
    }
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::UnsupportedDimension {
            dim,
            reason: "polytopes must have dimension between 1 and 6",
        });
    }
    Ok(dim)
}
