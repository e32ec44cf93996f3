//! Gain function on primitive ridges, the ridge graph, canonical scaling and
//! recovery of a quadratic form whose Voronoi cell is `P`.
//!
//! Convention: `gain(Fᵢ, Fⱼ) = |αⱼ / αᵢ|`, so a canonical scaling satisfies
//! `s(Fⱼ) = s(Fᵢ) · gain(Fᵢ, Fⱼ)` when crossing the ridge from `Fᵢ` to `Fⱼ`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::exact::{nullspace, Matrix, Scalar, Vector};
use crate::parallelohedron::{Belt, Parallelohedron};
use crate::{Error, Result};

mod form;

pub use form::{certify, voronoi_form, CertificateVerdict, VoronoiCertificate};

/// The linear dependence of the three tiling-facet normals at a primitive ridge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RidgeDependence<T> {
    pub ridge: usize,
    /// The two facets of `P` containing the ridge, followed by the facet `G` of
    /// `P` whose translate by `t₁` separates the two neighbors.
    pub facets: [usize; 3],
    pub normals: [Vector<T>; 3],
    /// Integer kernel vector with content 1: `Σ αᵢ nᵢ = 0`.
    pub alpha: Vector<T>,
}

/// Dependence at `ridge` using the canonical facet normals of `P`.
pub fn ridge_dependence<T: Scalar>(p: &Parallelohedron<T>, ridge: usize) -> Result<RidgeDependence<T>> {
    let normals: Vec<Vector<T>> = p.polytope().facets().iter().map(|f| f.normal.clone()).collect();
    ridge_dependence_with(p, ridge, &normals)
}

/// Dependence at `ridge` with caller-supplied outward facet normals.
///
/// The neighbors across the ridge's facets `F₁, F₂` are `P + t₁` and `P + t₂`;
/// they meet in a translate of the facet `G` with `t_G = t₂ − t₁`.
pub fn ridge_dependence_with<T: Scalar>(
    p: &Parallelohedron<T>,
    ridge: usize,
    normals: &[Vector<T>],
) -> Result<RidgeDependence<T>> {
    if !p.ridge_primitive(ridge) {
        return Err(Error::NotPrimitive(ridge));
    }
    let (f1, f2) = p.ridge_facets(ridge);
    let diff = p.facet_vector(f2) - p.facet_vector(f1);
    let g = p.facet_with_vector(&diff).ok_or_else(|| {
        Error::InputCorruption(format!("no facet separates the neighbors at ridge {ridge}"))
    })?;
    let ns = [normals[f1].clone(), normals[f2].clone(), normals[g].clone()];
    let kernel = nullspace(&Matrix::from_columns(&ns)?);
    if kernel.len() != 1 || kernel[0].iter().any(|a| a.is_zero()) {
        return Err(Error::InputCorruption(format!(
            "normals at ridge {ridge} do not have a unique full dependence"
        )));
    }
    Ok(RidgeDependence {
        ridge,
        facets: [f1, f2, g],
        normals: ns,
        alpha: kernel.into_iter().next().expect("one kernel vector"),
    })
}

/// `gain(from, to)` across a primitive ridge, where `{from, to}` are its facets.
pub fn gain<T: Scalar>(p: &Parallelohedron<T>, from: usize, to: usize, ridge: usize) -> Result<T> {
    let dep = ridge_dependence(p, ridge)?;
    oriented_gain(&dep, from, to)
}

fn oriented_gain<T: Scalar>(dep: &RidgeDependence<T>, from: usize, to: usize) -> Result<T> {
    let [f1, f2, _] = dep.facets;
    let (a1, a2) = (dep.alpha[0].abs(), dep.alpha[1].abs());
    if (from, to) == (f1, f2) {
        Ok(a2 / a1)
    } else if (from, to) == (f2, f1) {
        Ok(a1 / a2)
    } else {
        Err(Error::InvalidWalk(format!(
            "facets {from} and {to} do not meet at ridge {}",
            dep.ridge
        )))
    }
}

/// Alternating facet, ridge, facet, ... sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Walk {
    pub facets: Vec<usize>,
    /// `ridges[i]` is crossed between `facets[i]` and `facets[i + 1]`.
    pub ridges: Vec<usize>,
}

impl Walk {
    pub fn new(facets: Vec<usize>, ridges: Vec<usize>) -> Result<Self> {
        if facets.is_empty() || facets.len() != ridges.len() + 1 {
            return Err(Error::InvalidWalk(format!(
                "{} facets and {} ridges",
                facets.len(),
                ridges.len()
            )));
        }
        Ok(Walk { facets, ridges })
    }

    pub fn start(facet: usize) -> Self {
        Walk {
            facets: vec![facet],
            ridges: Vec::new(),
        }
    }

    pub fn first(&self) -> usize {
        self.facets[0]
    }

    pub fn last(&self) -> usize {
        *self.facets.last().expect("walks are nonempty")
    }

    pub fn len(&self) -> usize {
        self.ridges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ridges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.first() == self.last()
    }

    pub fn push(&mut self, ridge: usize, facet: usize) {
        self.ridges.push(ridge);
        self.facets.push(facet);
    }

    pub fn reversed(&self) -> Self {
        Walk {
            facets: self.facets.iter().rev().copied().collect(),
            ridges: self.ridges.iter().rev().copied().collect(),
        }
    }

    /// `self` followed by `other`; `other` must start where `self` ends.
    pub fn concat(&self, other: &Walk) -> Result<Self> {
        if self.last() != other.first() {
            return Err(Error::InvalidWalk("walks are not composable".into()));
        }
        let mut out = self.clone();
        out.facets.extend_from_slice(&other.facets[1..]);
        out.ridges.extend_from_slice(&other.ridges);
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RidgeEdge<T> {
    pub ridge: usize,
    pub from: usize,
    pub to: usize,
    /// `gain(from, to)`.
    pub gain: T,
}

/// Facets as nodes, primitive ridges as gain-weighted edges.
#[derive(Clone, Debug)]
pub struct RidgeGraph<T> {
    edges: Vec<RidgeEdge<T>>,
    adjacency: Vec<Vec<usize>>,
    by_ridge: std::collections::HashMap<usize, usize>,
    component: Vec<usize>,
    components: usize,
}

impl<T: Scalar> RidgeGraph<T> {
    pub fn build(p: &Parallelohedron<T>) -> Result<Self> {
        let normals: Vec<Vector<T>> = p.polytope().facets().iter().map(|f| f.normal.clone()).collect();
        Self::build_with_normals(p, &normals)
    }

    /// Build with arbitrary positive rescalings of the outward normals.
    pub fn build_with_normals(p: &Parallelohedron<T>, normals: &[Vector<T>]) -> Result<Self> {
        let n = p.polytope().facets().len();
        if normals.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} normals for {n} facets",
                normals.len()
            )));
        }
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        let mut by_ridge = std::collections::HashMap::new();
        for &r in p.polytope().ridges() {
            if !p.ridge_primitive(r) {
                continue;
            }
            let dep = ridge_dependence_with(p, r, normals)?;
            let (from, to) = (dep.facets[0], dep.facets[1]);
            let gain = oriented_gain(&dep, from, to)?;
            by_ridge.insert(r, edges.len());
            adjacency[from].push(edges.len());
            adjacency[to].push(edges.len());
            edges.push(RidgeEdge { ridge: r, from, to, gain });
        }
        let mut component = vec![usize::MAX; n];
        let mut components = 0;
        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            component[start] = components;
            while let Some(f) = queue.pop_front() {
                for &e in &adjacency[f] {
                    let g = edges[e].other(f);
                    if component[g] == usize::MAX {
                        component[g] = components;
                        queue.push_back(g);
                    }
                }
            }
            components += 1;
        }
        Ok(RidgeGraph {
            edges,
            adjacency,
            by_ridge,
            component,
            components,
        })
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> &[RidgeEdge<T>] {
        &self.edges
    }

    /// Edge indices at a facet.
    pub fn incident(&self, facet: usize) -> &[usize] {
        &self.adjacency[facet]
    }

    pub fn edge_of_ridge(&self, ridge: usize) -> Option<&RidgeEdge<T>> {
        self.by_ridge.get(&ridge).map(|&e| &self.edges[e])
    }

    pub fn component_of(&self, facet: usize) -> usize {
        self.component[facet]
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// Gain for crossing `ridge` from `from` to `to`.
    pub fn gain(&self, from: usize, to: usize, ridge: usize) -> Result<T> {
        let e = self
            .edge_of_ridge(ridge)
            .ok_or_else(|| Error::InvalidWalk(format!("ridge {ridge} is not a primitive ridge")))?;
        if (from, to) == (e.from, e.to) {
            Ok(e.gain.clone())
        } else if (from, to) == (e.to, e.from) {
            Ok(T::one() / e.gain.clone())
        } else {
            Err(Error::InvalidWalk(format!(
                "ridge {ridge} does not join facets {from} and {to}"
            )))
        }
    }

    /// Product of the edge gains along the walk.
    pub fn gain_along_walk(&self, w: &Walk) -> Result<T> {
        w.facets
            .windows(2)
            .zip(&w.ridges)
            .try_fold(T::one(), |acc, (pair, &r)| Ok(acc * self.gain(pair[0], pair[1], r)?))
    }
}

impl<T> RidgeEdge<T> {
    pub fn other(&self, facet: usize) -> usize {
        if facet == self.from {
            self.to
        } else {
            self.from
        }
    }
}

/// Positive facet weights compatible with every gain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalScaling<T> {
    pub values: Vec<T>,
    /// Base facet of each ridge-graph component, in component order.
    pub bases: Vec<usize>,
}

/// Why no canonical scaling exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScalingWitnessKind {
    /// A closed walk on the boundary with gain ≠ 1.
    Cycle,
    /// A walk from `F` to `−F` with gain ≠ 1: closed once opposite points are identified.
    Antipodal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingWitness<T> {
    pub kind: ScalingWitnessKind,
    pub walk: Walk,
    pub gain: T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalingOutcome<T> {
    Scaling(CanonicalScaling<T>),
    Violation(ScalingWitness<T>),
}

/// Spanning-tree propagation of the gains, then the opposite-facet step.
pub fn canonical_scaling<T: Scalar>(
    p: &Parallelohedron<T>,
    graph: &RidgeGraph<T>,
) -> Result<ScalingOutcome<T>> {
    let n = graph.node_count();
    let facets = p.polytope().facets();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| facets[a].normal.cmp(&facets[b].normal));

    // parent[f] = (parent facet, ridge); roots point to themselves
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut values: Vec<Option<T>> = vec![None; n];
    let mut bases = Vec::new();
    let mut tree_edges = std::collections::HashSet::new();
    for &base in &order {
        if values[base].is_some() {
            continue;
        }
        bases.push(base);
        values[base] = Some(T::one());
        let mut queue = VecDeque::from([base]);
        while let Some(f) = queue.pop_front() {
            for &e in graph.incident(f) {
                let edge = &graph.edges()[e];
                let g = edge.other(f);
                if values[g].is_none() {
                    let s = values[f].clone().expect("visited") * graph.gain(f, g, edge.ridge)?;
                    values[g] = Some(s);
                    parent[g] = Some((f, edge.ridge));
                    tree_edges.insert(e);
                    queue.push_back(g);
                }
            }
        }
    }
    let mut values: Vec<T> = values.into_iter().map(|v| v.expect("every facet reached")).collect();

    let tree_path = |f: usize| -> Walk {
        // walk from the component root down to f
        let mut facets_rev = vec![f];
        let mut ridges_rev = Vec::new();
        let mut cur = f;
        while let Some((par, r)) = parent[cur] {
            ridges_rev.push(r);
            facets_rev.push(par);
            cur = par;
        }
        facets_rev.reverse();
        ridges_rev.reverse();
        Walk {
            facets: facets_rev,
            ridges: ridges_rev,
        }
    };

    for (e, edge) in graph.edges().iter().enumerate() {
        if tree_edges.contains(&e) {
            continue;
        }
        if values[edge.to] != values[edge.from].clone() * edge.gain.clone() {
            let mut walk = tree_path(edge.from);
            walk.push(edge.ridge, edge.to);
            let walk = walk.concat(&tree_path(edge.to).reversed())?;
            let gain = graph.gain_along_walk(&walk)?;
            return Ok(ScalingOutcome::Violation(ScalingWitness {
                kind: ScalingWitnessKind::Cycle,
                walk,
                gain,
            }));
        }
    }

    // opposite facets: equal within a component, matched across components
    let mut settled = vec![false; bases.len()];
    for (ci, &base) in bases.iter().enumerate() {
        let comp = graph.component_of(base);
        let opp = p.opposite(base);
        let opp_comp = graph.component_of(opp);
        if comp == opp_comp {
            for f in (0..n).filter(|&f| graph.component_of(f) == comp) {
                let o = p.opposite(f);
                if values[f] != values[o] {
                    let walk = tree_path(f).reversed().concat(&tree_path(o))?;
                    let gain = graph.gain_along_walk(&walk)?;
                    return Ok(ScalingOutcome::Violation(ScalingWitness {
                        kind: ScalingWitnessKind::Antipodal,
                        walk,
                        gain,
                    }));
                }
            }
            settled[ci] = true;
        } else if !settled[ci] {
            let oi = bases
                .iter()
                .position(|&b| graph.component_of(b) == opp_comp)
                .expect("every component has a base");
            let factor = values[base].clone() / values[opp].clone();
            for f in (0..n).filter(|&f| graph.component_of(f) == opp_comp) {
                values[f] = values[f].clone() * factor.clone();
            }
            for f in (0..n).filter(|&f| graph.component_of(f) == comp) {
                if values[f] != values[p.opposite(f)] {
                    return Err(Error::InputCorruption(format!(
                        "gains are not symmetric under F -> -F at facet {f}"
                    )));
                }
            }
            settled[ci] = true;
            settled[oi] = true;
        }
    }
    Ok(ScalingOutcome::Scaling(CanonicalScaling { values, bases }))
}

/// The cyclic walk of facets around a codim-3 face, when every ridge
/// through the face is primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalCycle<T> {
    Product { walk: Walk, gain: T },
    Skipped { reason: String },
}

pub fn local_cycle_check<T: Scalar>(
    p: &Parallelohedron<T>,
    graph: &RidgeGraph<T>,
    face: usize,
) -> Result<LocalCycle<T>> {
    let poly = p.polytope();
    let d = poly.dim();
    if d < 3 || poly.face(face).dim + 3 != d {
        return Err(Error::InvalidArgument(format!("face {face} is not of codimension 3")));
    }
    let lattice = poly.face_lattice();
    let ridges: Vec<usize> = lattice.covered_by(face).to_vec();
    if let Some(&r) = ridges.iter().find(|&&r| !p.ridge_primitive(r)) {
        return Ok(LocalCycle::Skipped {
            reason: format!("ridge {r} through the face is not primitive"),
        });
    }
    let start_ridge = ridges[0];
    let (first, _) = p.ridge_facets(start_ridge);
    let mut walk = Walk::start(first);
    let mut used = vec![false; ridges.len()];
    let mut cur = first;
    loop {
        // the unused ridge through the face on the current facet
        let next = ridges
            .iter()
            .enumerate()
            .find(|&(i, &r)| {
                !used[i] && {
                    let (a, b) = p.ridge_facets(r);
                    a == cur || b == cur
                }
            })
            .map(|(i, &r)| (i, r));
        let Some((i, r)) = next else { break };
        used[i] = true;
        let (a, b) = p.ridge_facets(r);
        cur = if a == cur { b } else { a };
        walk.push(r, cur);
    }
    if !walk.is_closed() || used.iter().any(|u| !u) {
        return Err(Error::InputCorruption(format!(
            "facets around face {face} do not form a single cycle"
        )));
    }
    let gain = graph.gain_along_walk(&walk)?;
    Ok(LocalCycle::Product { walk, gain })
}

/// The half-belt walk `F₀ → F₁ → F₂ → F₃ = −F₀` along a 6-belt, starting at `offset`.
pub fn half_belt_walk(belt: &Belt, offset: usize) -> Result<Walk> {
    let len = belt.len();
    if len != 6 {
        return Err(Error::InvalidArgument(format!("belt of length {len} has no half-belt cycles")));
    }
    let facets = (0..4).map(|i| belt.facets[(offset + i) % len]).collect();
    let ridges = (0..3).map(|i| belt.ridges[(offset + i) % len]).collect();
    Walk::new(facets, ridges)
}

/// The full closed walk around a belt.
pub fn belt_walk(belt: &Belt) -> Walk {
    let len = belt.len();
    let facets = (0..=len).map(|i| belt.facets[i % len]).collect();
    Walk {
        facets,
        ridges: belt.ridges.clone(),
    }
}

/// Gain product over three consecutive edges of a 6-belt.
pub fn half_belt_check<T: Scalar>(graph: &RidgeGraph<T>, belt: &Belt) -> Result<T> {
    graph.gain_along_walk(&half_belt_walk(belt, 0)?)
}
