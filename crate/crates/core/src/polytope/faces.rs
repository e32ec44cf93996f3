use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::exact::{affine_rank, centroid, Scalar, Vector};

/// A nonempty face of a polytope, stored by its vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face<T> {
    pub dim: usize,
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    /// Sorted indices of the facets containing this face (empty for the polytope itself).
    pub facets: Vec<usize>,
    /// Centroid of the face's vertices.
    pub center: Vector<T>,
}

/// All nonempty faces, graded by dimension up to the polytope itself.
///
/// The empty face is implicit. Faces are sorted by `(dim, vertices)`.
#[derive(Clone, Debug)]
pub struct FaceLattice<T> {
    faces: Vec<Face<T>>,
    by_dim: Vec<Vec<usize>>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    facet_faces: Vec<usize>,
}

impl<T: Scalar> FaceLattice<T> {
    /// Build from the vertex coordinates and the vertex sets of the facets.
    pub(crate) fn build(dim: usize, vertices: &[Vector<T>], facet_vertices: &[Vec<usize>]) -> Self {
        let facet_sets: Vec<BTreeSet<usize>> = facet_vertices
            .iter()
            .map(|f| f.iter().copied().collect())
            .collect();

        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<BTreeSet<usize>> = VecDeque::new();
        for f in &facet_sets {
            if seen.insert(f.iter().copied().collect()) {
                queue.push_back(f.clone());
            }
        }
        while let Some(face) = queue.pop_front() {
            for f in &facet_sets {
                if face.is_subset(f) {
                    continue;
                }
                let meet: BTreeSet<usize> = face.intersection(f).copied().collect();
                if !meet.is_empty() && seen.insert(meet.iter().copied().collect()) {
                    queue.push_back(meet);
                }
            }
        }
        seen.insert((0..vertices.len()).collect());

        let mut faces: Vec<Face<T>> = seen
            .into_iter()
            .map(|vs| {
                let pts: Vec<Vector<T>> = vs.iter().map(|&i| vertices[i].clone()).collect();
                let facets = if vs.len() == vertices.len() {
                    Vec::new()
                } else {
                    facet_sets
                        .iter()
                        .enumerate()
                        .filter(|(_, f)| vs.iter().all(|v| f.contains(v)))
                        .map(|(i, _)| i)
                        .collect()
                };
                Face {
                    dim: affine_rank(&pts),
                    center: centroid(pts.iter()),
                    vertices: vs,
                    facets,
                }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));

        let mut by_dim = vec![Vec::new(); dim + 1];
        for (i, f) in faces.iter().enumerate() {
            by_dim[f.dim].push(i);
        }
        let index: HashMap<Vec<usize>, usize> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.vertices.clone(), i))
            .collect();

        let mut up = vec![Vec::new(); faces.len()];
        let mut down = vec![Vec::new(); faces.len()];
        for k in 0..dim {
            for &lo in &by_dim[k] {
                let lo_set = &faces[lo].vertices;
                for &hi in &by_dim[k + 1] {
                    if is_sorted_subset(lo_set, &faces[hi].vertices) {
                        up[lo].push(hi);
                        down[hi].push(lo);
                    }
                }
            }
        }

        let facet_faces = facet_vertices
            .iter()
            .map(|f| index[f])
            .collect();

        FaceLattice {
            faces,
            by_dim,
            up,
            down,
            index,
            facet_faces,
        }
    }

    pub fn faces(&self) -> &[Face<T>] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face<T> {
        &self.faces[i]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Indices of the faces of dimension `k`.
    pub fn of_dim(&self, k: usize) -> &[usize] {
        self.by_dim.get(k).map_or(&[], Vec::as_slice)
    }

    /// Faces one dimension higher that contain face `i`.
    pub fn covered_by(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    /// Faces one dimension lower contained in face `i`.
    pub fn covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    /// All faces (of any dimension, excluding `i` itself) contained in face `i`.
    pub fn below(&self, i: usize) -> Vec<usize> {
        let mut out = BTreeSet::new();
        let mut stack = vec![i];
        while let Some(f) = stack.pop() {
            for &g in &self.down[f] {
                if out.insert(g) {
                    stack.push(g);
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn find(&self, vertices: &[usize]) -> Option<usize> {
        self.index.get(vertices).copied()
    }

    /// Face index of facet `i` of the polytope.
    pub fn facet_face(&self, facet: usize) -> usize {
        self.facet_faces[facet]
    }

    /// Face counts for dimensions `0..=d`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }
}

pub(crate) fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_subset() {
        assert!(is_sorted_subset(&[1, 3], &[0, 1, 2, 3]));
        assert!(!is_sorted_subset(&[1, 4], &[0, 1, 2, 3]));
        assert!(is_sorted_subset(&[], &[0]));
    }
}
