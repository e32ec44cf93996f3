//! Dual cells: the centers of the tiles around a face, their hulls, Delone's
//! classification of dual 3-cells, primitivity and k-irreducibility.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use super::Parallelohedron;
use crate::exact::{affine_rank, rank_of, rref, Matrix, Scalar, Vector};
use crate::polytope::Polytope;
use crate::{Error, Result};

/// Tile centers around a face of `P` (the origin is always one of them).
#[derive(Clone, Debug)]
pub struct DualCell<T> {
    pub face: usize,
    pub codim: usize,
    /// Sorted.
    pub centers: Vec<Vector<T>>,
    /// Convex hull of the centers inside their affine span, for codim 2 and 3.
    pub hull: Option<Polytope<T>>,
}

/// Combinatorial types of dual 3-cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DelonType {
    Tetrahedron,
    Octahedron,
    QuadrangularPyramid,
    TriangularPrism,
    Cube,
}

impl DelonType {
    pub const ALL: [DelonType; 5] = [
        DelonType::Tetrahedron,
        DelonType::Octahedron,
        DelonType::QuadrangularPyramid,
        DelonType::TriangularPrism,
        DelonType::Cube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DelonType::Tetrahedron => "tetrahedron",
            DelonType::Octahedron => "octahedron",
            DelonType::QuadrangularPyramid => "quadrangular-pyramid",
            DelonType::TriangularPrism => "triangular-prism",
            DelonType::Cube => "cube",
        }
    }

    /// Center count and sorted polygon sizes of the 2-faces.
    fn template(self) -> (usize, &'static [usize]) {
        match self {
            DelonType::Tetrahedron => (4, &[3, 3, 3, 3]),
            DelonType::Octahedron => (6, &[3, 3, 3, 3, 3, 3, 3, 3]),
            DelonType::QuadrangularPyramid => (5, &[3, 3, 3, 3, 4]),
            DelonType::TriangularPrism => (6, &[3, 3, 4, 4, 4]),
            DelonType::Cube => (8, &[4, 4, 4, 4, 4, 4]),
        }
    }
}

impl fmt::Display for DelonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a dual 3-cell looked like when it matched none of the five types.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DelonePattern {
    pub centers: usize,
    pub hull_dim: usize,
    pub polygon_sizes: Vec<usize>,
}

/// Type counts over all codim-3 faces, and the faces that matched no type.
pub type Census = (BTreeMap<DelonType, usize>, Vec<(usize, DelonePattern)>);

/// Result of the k-irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility<T> {
    Irreducible,
    /// Normal lines at `face` split into two parts with independent spans.
    Reducible {
        face: usize,
        first: Vec<Vector<T>>,
        second: Vec<Vector<T>>,
    },
}

impl<T> Irreducibility<T> {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

impl<T: Scalar> Parallelohedron<T> {
    /// Tile centers `t ∈ Λ(P)` with `face ⊆ P + t`.
    pub fn dual_cell(&self, face: usize) -> Result<DualCell<T>> {
        let p = self.polytope();
        let f = p.face(face);
        let codim = p.dim() - f.dim;
        let centers: Vec<Vector<T>> = self
            .star_vectors()
            .iter()
            .filter(|t| f.vertices.iter().all(|&v| p.contains(&(p.vertex(v) - *t))))
            .cloned()
            .collect();
        let hull = if (2..=3).contains(&codim) && centers.len() > codim {
            Some(hull_in_span(&centers)?)
        } else {
            None
        };
        Ok(DualCell {
            face,
            codim,
            centers,
            hull,
        })
    }

    /// Match a dual 3-cell against Delone's five types.
    pub fn classify_dual3(&self, cell: &DualCell<T>) -> std::result::Result<DelonType, DelonePattern> {
        let hull_dim = affine_rank(&cell.centers);
        let polygon_sizes: Vec<usize> = match (&cell.hull, hull_dim) {
            (Some(h), 3) => h
                .face_lattice()
                .of_dim(2)
                .iter()
                .map(|&i| h.face(i).vertices.len())
                .sorted()
                .collect(),
            _ => Vec::new(),
        };
        let pattern = DelonePattern {
            centers: cell.centers.len(),
            hull_dim,
            polygon_sizes,
        };
        DelonType::ALL
            .into_iter()
            .find(|t| {
                let (n, sizes) = t.template();
                pattern.hull_dim == 3 && pattern.centers == n && pattern.polygon_sizes == sizes
            })
            .ok_or(pattern)
    }

    /// Classify the dual cell of every codim-3 face. Unmatched faces are
    /// returned separately: each one is a counterexample to the dimension
    /// conjecture for dual cells at that instance.
    pub fn dual3_census(&self) -> Result<Census> {
        let d = self.dim();
        if d < 3 {
            return Err(Error::UnsupportedDimension {
                dim: d,
                reason: "dual 3-cells need d >= 3",
            });
        }
        let mut census = BTreeMap::new();
        let mut anomalies = Vec::new();
        for &face in self.polytope().face_lattice().of_dim(d - 3) {
            let cell = self.dual_cell(face)?;
            match self.classify_dual3(&cell) {
                Ok(t) => *census.entry(t).or_insert(0) += 1,
                Err(pattern) => anomalies.push((face, pattern)),
            }
        }
        Ok((census, anomalies))
    }

    /// For each codimension `k = 1..=min(3, d)`: whether every codim-`k` face
    /// lies in exactly `k + 1` tiles.
    pub fn primitivity_profile(&self) -> Result<Vec<bool>> {
        let d = self.dim();
        (1..=d.min(3))
            .map(|k| {
                for &face in self.polytope().face_lattice().of_dim(d - k) {
                    if self.dual_cell(face)?.centers.len() != k + 1 {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
            .collect()
    }

    /// Lines spanned by the normals of the tiling facets that contain `face`.
    pub fn normal_lines(&self, face: usize) -> Result<Vec<Vector<T>>> {
        let p = self.polytope();
        let verts = &p.face(face).vertices;
        let mut lines = Vec::new();
        for t in self.dual_cell(face)?.centers {
            for facet in p.facets() {
                let on = verts
                    .iter()
                    .all(|&v| facet.normal.dot(&(p.vertex(v) - &t)) == facet.offset);
                if on {
                    lines.push(facet.normal.canonical_direction());
                }
            }
        }
        lines.sort();
        lines.dedup();
        Ok(lines)
    }

    /// `P` is k-irreducible if at no codim-`k` face the normal lines split into
    /// nonempty `N₁, N₂` with `lin N₁ ∩ lin N₂ = {0}`.
    pub fn is_k_irreducible(&self, k: usize) -> Result<Irreducibility<T>> {
        let d = self.dim();
        if k < 2 || k > d {
            return Err(Error::InvalidArgument(format!(
                "k-irreducibility needs 2 <= k <= {d}, got {k}"
            )));
        }
        for &face in self.polytope().face_lattice().of_dim(d - k) {
            let lines = self.normal_lines(face)?;
            let total = rank_of(&lines);
            let m = lines.len();
            if m < 2 {
                continue;
            }
            // the first line always goes into N₁, so each split is visited once
            for mask in 1u64..(1 << (m - 1)) {
                let (first, second): (Vec<_>, Vec<_>) = lines
                    .iter()
                    .enumerate()
                    .partition(|(i, _)| *i == 0 || (mask >> (i - 1)) & 1 == 0);
                let first: Vec<Vector<T>> = first.into_iter().map(|(_, v)| v.clone()).collect();
                let second: Vec<Vector<T>> = second.into_iter().map(|(_, v)| v.clone()).collect();
                if rank_of(&first) + rank_of(&second) == total {
                    return Ok(Irreducibility::Reducible {
                        face,
                        first,
                        second,
                    });
                }
            }
        }
        Ok(Irreducibility::Irreducible)
    }
}

/// Convex hull of points taken in coordinates of their affine span.
///
/// Projects onto the pivot coordinates of the difference vectors, which is
/// injective on the span, so the combinatorics are preserved.
pub(crate) fn hull_in_span<T: Scalar>(points: &[Vector<T>]) -> Result<Polytope<T>> {
    let base = &points[0];
    let diffs: Vec<Vector<T>> = points.iter().map(|p| p - base).collect();
    let pivots = rref(&Matrix::from_row_vectors(&diffs)?).pivots;
    let projected = points
        .iter()
        .map(|p| Vector(pivots.iter().map(|&j| p[j].clone()).collect()))
        .collect();
    Polytope::from_vertices(projected)
}
