//! The δ-surface of a 3-dimensional parallelohedron (its boundary with every
//! closed non-primitive edge cut out) and the π-surface, its quotient by the
//! antipodal map.
//!
//! Both are stored as collections of open cells. Homology is computed on the
//! order complex of the surviving cells: its geometric realization is a
//! deformation retract of the open surface, so rational Betti numbers can be
//! read off from boundary matrices without building a collar by hand. The
//! antipodal map acts freely and preserves the face order, so the π-surface
//! is handled by passing to orbits of chains.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::Scalar;
use crate::parallelohedron::{Belt, Parallelohedron};
use crate::scaling::RidgeGraph;
use crate::{Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    Delta,
    Pi,
}

impl SurfaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SurfaceKind::Delta => "delta",
            SurfaceKind::Pi => "pi",
        }
    }
}

/// One open cell. On the δ side it is a single face of `P`; on the π side it
/// is an antipodal pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceCell {
    pub dim: usize,
    /// Face indices of `P`, sorted.
    pub faces: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SurfaceComplex {
    kind: SurfaceKind,
    cells: Vec<SurfaceCell>,
    /// Surviving faces of `P`, sorted by face index.
    faces: Vec<usize>,
    /// Surviving faces strictly above each surviving face (local indices).
    above: Vec<Vec<usize>>,
    /// Whether the closure of the face meets a removed face.
    touches_removed: Vec<bool>,
    /// Local face index to cell index.
    cell_of: Vec<usize>,
    /// Component of each cell.
    component: Vec<usize>,
    component_count: usize,
    /// Component of each local face in the δ-surface.
    delta_component: Vec<usize>,
    removed: Vec<usize>,
}

/// Topology of one connected component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    /// Open cell counts by dimension.
    pub cells: Vec<usize>,
    /// Alternating count of open cells.
    pub chi: i64,
    pub compact: bool,
    /// First Betti number over the rationals.
    pub h1_rank: usize,
    pub orientable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfBeltSpan {
    pub h1_rank: usize,
    /// Rank of the subspace of rational H1 spanned by half-belt cycles.
    pub span_rank: usize,
    pub spanned: bool,
    pub cycles: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyReport {
    pub surface: SurfaceKind,
    pub components: Vec<ComponentReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub half_belt_span: Option<HalfBeltSpan>,
}

impl TopologyReport {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Betti numbers of the components, sorted.
    pub fn h1_ranks(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.components.iter().map(|c| c.h1_rank).collect();
        r.sort_unstable();
        r
    }

    pub fn chis(&self) -> Vec<i64> {
        let mut r: Vec<i64> = self.components.iter().map(|c| c.chi).collect();
        r.sort_unstable();
        r
    }

    /// Open cell counts of the whole surface by dimension.
    pub fn cell_counts(&self) -> Vec<usize> {
        let mut total = vec![0; 3];
        for c in &self.components {
            for (t, n) in total.iter_mut().zip(&c.cells) {
                *t += n;
            }
        }
        total
    }
}

/// The δ-surface of a 3-dimensional parallelohedron.
pub fn delta_complex<T: Scalar>(p: &Parallelohedron<T>) -> Result<SurfaceComplex> {
    SurfaceComplex::build(p, SurfaceKind::Delta)
}

/// The π-surface: the δ-surface with antipodal points identified.
pub fn pi_complex<T: Scalar>(p: &Parallelohedron<T>) -> Result<SurfaceComplex> {
    SurfaceComplex::build(p, SurfaceKind::Pi)
}

/// Number of components of the ridge graph. In dimension 3 this equals the
/// number of components of the δ-surface; in any dimension it is the proxy
/// used for connectivity.
pub fn ridge_connectivity<T: Scalar>(p: &Parallelohedron<T>) -> Result<usize> {
    Ok(RidgeGraph::build(p)?.component_count())
}

impl SurfaceComplex {
    fn build<T: Scalar>(p: &Parallelohedron<T>, kind: SurfaceKind) -> Result<Self> {
        let d = p.dim();
        if d != 3 {
            return Err(Error::UnsupportedDimension {
                dim: d,
                reason: "surface complexes are built for d = 3 only; use ridge connectivity",
            });
        }
        let poly = p.polytope();
        let lat = poly.face_lattice();

        let mut removed_flag = vec![false; lat.len()];
        for &r in poly.ridges() {
            if !p.ridge_primitive(r) {
                removed_flag[r] = true;
                for v in lat.below(r) {
                    removed_flag[v] = true;
                }
            }
        }
        let removed: Vec<usize> = (0..lat.len()).filter(|&i| removed_flag[i]).collect();
        let faces: Vec<usize> = (0..lat.len())
            .filter(|&i| lat.face(i).dim < d && !removed_flag[i])
            .collect();
        let local: HashMap<usize, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let dims: Vec<usize> = faces.iter().map(|&f| lat.face(f).dim).collect();

        let above: Vec<Vec<usize>> = faces
            .iter()
            .map(|&f| {
                let mut out = Vec::new();
                let mut stack = vec![f];
                while let Some(x) = stack.pop() {
                    for &y in lat.covered_by(x) {
                        if lat.face(y).dim < d && !out.contains(&y) {
                            out.push(y);
                            stack.push(y);
                        }
                    }
                }
                let mut out: Vec<usize> = out.into_iter().map(|y| local[&y]).collect();
                out.sort_unstable();
                out
            })
            .collect();
        let touches_removed: Vec<bool> = faces
            .iter()
            .map(|&f| lat.below(f).iter().any(|&g| removed_flag[g]))
            .collect();

        let neg_vertex: Vec<usize> = poly
            .vertices()
            .iter()
            .map(|v| {
                poly.vertex_index(&-v)
                    .ok_or_else(|| Error::InputCorruption("vertex set is not symmetric".into()))
            })
            .collect::<Result<_>>()?;
        let antipode: Vec<usize> = faces
            .iter()
            .map(|&f| {
                let mut vs: Vec<usize> = lat.face(f).vertices.iter().map(|&v| neg_vertex[v]).collect();
                vs.sort_unstable();
                lat.find(&vs)
                    .and_then(|g| local.get(&g).copied())
                    .ok_or_else(|| Error::InputCorruption("antipodal face missing".into()))
            })
            .collect::<Result<_>>()?;

        let n = faces.len();
        let mut cells = Vec::new();
        let mut cell_of = vec![usize::MAX; n];
        for i in 0..n {
            if cell_of[i] != usize::MAX {
                continue;
            }
            let orbit = match kind {
                SurfaceKind::Delta => vec![i],
                SurfaceKind::Pi => {
                    let j = antipode[i];
                    if j == i {
                        return Err(Error::InputCorruption("antipodal map fixes a face".into()));
                    }
                    vec![i, j]
                }
            };
            for &o in &orbit {
                cell_of[o] = cells.len();
            }
            cells.push(SurfaceCell {
                dim: dims[i],
                faces: orbit.iter().map(|&o| faces[o]).collect(),
            });
        }

        let delta_component = components(n, |i| above[i].clone());
        let cell_above = |c: usize| -> Vec<usize> {
            let mut out: Vec<usize> = cells[c]
                .faces
                .iter()
                .flat_map(|f| above[local[f]].iter().map(|&j| cell_of[j]))
                .collect();
            out.sort_unstable();
            out.dedup();
            out
        };
        let component = components(cells.len(), cell_above);
        let component_count = component.iter().max().map_or(0, |m| m + 1);

        Ok(SurfaceComplex {
            kind,
            cells,
            faces,
            above,
            touches_removed,
            cell_of,
            component,
            component_count,
            delta_component,
            removed,
        })
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn cells(&self) -> &[SurfaceCell] {
        &self.cells
    }

    /// Face indices of `P` that were cut out.
    pub fn removed_faces(&self) -> &[usize] {
        &self.removed
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn component_of(&self, cell: usize) -> usize {
        self.component[cell]
    }

    /// Open cell counts by dimension.
    pub fn cell_counts(&self) -> Vec<usize> {
        let mut out = vec![0; 3];
        for c in &self.cells {
            out[c.dim] += 1;
        }
        out
    }

    /// Compactly supported Euler characteristic of the whole surface.
    pub fn chi(&self) -> i64 {
        self.cells.iter().map(|c| sign(c.dim)).sum()
    }

    /// Components, cell counts, χ, compactness, Betti numbers, orientability.
    pub fn report(&self) -> TopologyReport {
        let chains = self.chains();
        let k = self.component_count;
        let mut reports: Vec<ComponentReport> = (0..k)
            .map(|_| ComponentReport {
                cells: vec![0; 3],
                chi: 0,
                compact: true,
                h1_rank: 0,
                orientable: true,
            })
            .collect();
        for (c, cell) in self.cells.iter().enumerate() {
            let r = &mut reports[self.component[c]];
            r.cells[cell.dim] += 1;
            r.chi += sign(cell.dim);
            let first = self.local_of_face(cell.faces[0]);
            if self.touches_removed[first] {
                r.compact = false;
            }
        }

        let mut vertices = vec![0usize; k];
        for c in 0..self.cells.len() {
            vertices[self.component[c]] += 1;
        }
        let mut edges = vec![0usize; k];
        for &(a, _) in &chains.edges {
            edges[self.component[a]] += 1;
        }
        let mut boundaries: Vec<Eliminator> = (0..k).map(|_| Eliminator::default()).collect();
        for (t, column) in chains.triangles.iter().zip(&chains.triangle_boundaries) {
            boundaries[self.component[t[0]]].insert(column.clone());
        }
        for (i, r) in reports.iter_mut().enumerate() {
            // H1 = edges - rank d1 - rank d2, and d1 has rank V - 1 on a connected piece
            r.h1_rank = edges[i] - (vertices[i] - 1) - boundaries[i].rank();
        }

        if self.kind == SurfaceKind::Pi {
            // every δ component is an open subset of the sphere and the
            // antipodal map reverses the sphere's orientation, so a π component
            // is orientable exactly when it lifts to two disjoint copies
            let mut lifts: Vec<Vec<usize>> = vec![Vec::new(); k];
            for (i, &c) in self.cell_of.iter().enumerate() {
                let dc = self.delta_component[i];
                if !lifts[self.component[c]].contains(&dc) {
                    lifts[self.component[c]].push(dc);
                }
            }
            for (r, l) in reports.iter_mut().zip(lifts) {
                r.orientable = l.len() == 2;
            }
        }

        TopologyReport {
            surface: self.kind,
            components: reports,
            half_belt_span: None,
        }
    }

    fn local_of_face(&self, face: usize) -> usize {
        self.faces.binary_search(&face).expect("cell faces survive")
    }

    /// Order complex of the cell poset, with chains taken up to the antipodal
    /// map on the π side. Simplices are keyed by their cell sequence.
    fn chains(&self) -> Chains {
        let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut triangles: BTreeMap<[usize; 3], ()> = BTreeMap::new();
        for a in 0..self.faces.len() {
            for &b in &self.above[a] {
                edges.entry((self.cell_of[a], self.cell_of[b])).or_insert(0);
                for &c in &self.above[b] {
                    triangles.insert([self.cell_of[a], self.cell_of[b], self.cell_of[c]], ());
                }
            }
        }
        for (i, v) in edges.values_mut().enumerate() {
            *v = i;
        }
        let triangles: Vec<[usize; 3]> = triangles.into_keys().collect();
        let triangle_boundaries = triangles
            .iter()
            .map(|&[a, b, c]| {
                let mut col = SparseVec::new();
                add_entry(&mut col, edges[&(b, c)], Rational::one());
                add_entry(&mut col, edges[&(a, c)], -Rational::one());
                add_entry(&mut col, edges[&(a, b)], Rational::one());
                col
            })
            .collect();
        Chains {
            edge_index: edges.clone(),
            edges: edges.into_keys().collect(),
            triangles,
            triangle_boundaries,
        }
    }

    /// The 1-chain of the walk `F₀ → r₀ → F₁ → …` through facet and ridge
    /// faces of `P`, in order-complex coordinates.
    fn walk_chain(&self, chains: &Chains, faces: &[usize]) -> Result<SparseVec> {
        let mut chain = SparseVec::new();
        for pair in faces.windows(2) {
            let (x, y) = (self.local_of(pair[0])?, self.local_of(pair[1])?);
            let (cx, cy) = (self.cell_of[x], self.cell_of[y]);
            let (key, coeff) = if self.above[x].contains(&y) {
                ((cx, cy), Rational::one())
            } else if self.above[y].contains(&x) {
                ((cy, cx), -Rational::one())
            } else {
                return Err(Error::InvalidWalk(format!("faces {} and {} are not incident", pair[0], pair[1])));
            };
            add_entry(&mut chain, chains.edge_index[&key], coeff);
        }
        Ok(chain)
    }

    fn local_of(&self, face: usize) -> Result<usize> {
        self.faces
            .binary_search(&face)
            .map_err(|_| Error::InvalidWalk(format!("face {face} is not on the surface")))
    }

    /// Boundary of a 1-chain, as a map from cells to coefficients.
    fn chain_boundary(&self, chains: &Chains, chain: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&e, c) in chain {
            let (a, b) = chains.edges[e];
            add_entry(&mut out, b, c.clone());
            add_entry(&mut out, a, -c.clone());
        }
        out
    }
}

/// How many independent rational H1 classes of the π-surface are represented
/// by half-belt cycles. A half-belt cycle walks across three consecutive
/// ridges of a 6-belt, from a facet to its opposite, which closes up on the
/// π-surface.
pub fn half_belt_span_d3<T: Scalar>(p: &Parallelohedron<T>) -> Result<HalfBeltSpan> {
    let c = pi_complex(p)?;
    let chains = c.chains();
    let report = c.report();
    let h1_rank: usize = report.components.iter().map(|r| r.h1_rank).sum();

    let mut elim = Eliminator::default();
    for col in &chains.triangle_boundaries {
        elim.insert(col.clone());
    }
    let boundary_rank = elim.rank();
    let lat = p.polytope().face_lattice();
    let mut cycles = 0;
    for belt in p.belts().iter().filter(|b| b.is_primitive()) {
        for offset in 0..belt.len() {
            let faces = half_belt_faces(belt, offset, |f| lat.facet_face(f));
            let chain = c.walk_chain(&chains, &faces)?;
            if !c.chain_boundary(&chains, &chain).is_empty() {
                return Err(Error::InputCorruption(format!(
                    "half-belt walk at offset {offset} does not close on the π-surface"
                )));
            }
            elim.insert(chain);
            cycles += 1;
        }
    }
    let span_rank = elim.rank() - boundary_rank;
    Ok(HalfBeltSpan {
        h1_rank,
        span_rank,
        spanned: span_rank == h1_rank,
        cycles,
    })
}

/// Facet and ridge faces visited by the half-belt walk starting at `offset`.
fn half_belt_faces(belt: &Belt, offset: usize, facet_face: impl Fn(usize) -> usize) -> Vec<usize> {
    let n = belt.len();
    let mut out = vec![facet_face(belt.facets[offset % n])];
    for j in 0..3 {
        out.push(belt.ridges[(offset + j) % n]);
        out.push(facet_face(belt.facets[(offset + j + 1) % n]));
    }
    out
}

struct Chains {
    edge_index: BTreeMap<(usize, usize), usize>,
    /// `(lower cell, upper cell)` per edge.
    edges: Vec<(usize, usize)>,
    triangles: Vec<[usize; 3]>,
    triangle_boundaries: Vec<SparseVec>,
}

type SparseVec = BTreeMap<usize, Rational>;

fn add_entry(v: &mut SparseVec, key: usize, value: Rational) {
    let entry = v.entry(key).or_insert_with(Rational::zero);
    *entry += value;
    if entry.is_zero() {
        v.remove(&key);
    }
}

/// Incremental row reduction over the rationals on sparse vectors.
#[derive(Default)]
struct Eliminator {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Eliminator {
    /// Returns whether `v` was independent of what was inserted before.
    fn insert(&mut self, mut v: SparseVec) -> bool {
        while let Some((&lead, coeff)) = v.iter().next() {
            let Some(pivot) = self.pivots.get(&lead) else {
                let inv = coeff.recip();
                for x in v.values_mut() {
                    *x *= &inv;
                }
                self.pivots.insert(lead, v);
                return true;
            };
            let factor = coeff.clone();
            for (&k, x) in pivot {
                add_entry(&mut v, k, -(x * &factor));
            }
        }
        false
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn components(n: usize, neighbours: impl Fn(usize) -> Vec<usize>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in neighbours(i) {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    // label components in order of their least element
    let mut label = HashMap::new();
    (0..n)
        .map(|i| {
            let root = find(&mut parent, i);
            let next = label.len();
            *label.entry(root).or_insert(next)
        })
        .collect()
}

fn sign(dim: usize) -> i64 {
    if dim.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
