//! From a canonical scaling to a positive-definite form `G` with
//! `G · t_F ∥ n_F`, followed by an independent Voronoi-cell check.

use itertools::Itertools;

use super::{canonical_scaling, CanonicalScaling, RidgeGraph, ScalingOutcome, ScalingWitness};
use crate::exact::{is_positive_definite, nullspace, solve_linear, Matrix, Scalar, Vector};
use crate::parallelohedron::Parallelohedron;
use crate::Result;

/// Largest number of nullspace directions combined in the sign search.
const MAX_SEARCH_DIM: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateVerdict<T> {
    /// `G` is positive definite and the Voronoi cell of `(Λ(P), G)` is `P`.
    Certified,
    ScalingFails(ScalingWitness<T>),
    /// No positive-definite member found; the solution space basis is kept.
    FormNotPd { basis: Vec<Matrix<T>> },
    /// `G` is positive definite but its Voronoi cell differs from `P`.
    DvMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoronoiCertificate<T> {
    pub scaling: Option<CanonicalScaling<T>>,
    /// Primitive integer representative of the recovered form.
    pub gram: Option<Matrix<T>>,
    pub verdict: CertificateVerdict<T>,
}

impl<T> VoronoiCertificate<T> {
    pub fn is_certified(&self) -> bool {
        matches!(self.verdict, CertificateVerdict::Certified)
    }
}

/// Run the whole pipeline: ridge graph, canonical scaling, form, verification.
pub fn certify<T: Scalar>(p: &Parallelohedron<T>) -> Result<VoronoiCertificate<T>> {
    let graph = RidgeGraph::build(p)?;
    match canonical_scaling(p, &graph)? {
        ScalingOutcome::Violation(w) => Ok(VoronoiCertificate {
            scaling: None,
            gram: None,
            verdict: CertificateVerdict::ScalingFails(w),
        }),
        ScalingOutcome::Scaling(s) => voronoi_form(p, &graph, &s),
    }
}

/// Solve `G t_F = c_k s(F) n_F` over symmetric `G` and one positive factor `c_k`
/// per ridge-graph component, pick a positive-definite solution and verify it.
pub fn voronoi_form<T: Scalar>(
    p: &Parallelohedron<T>,
    graph: &RidgeGraph<T>,
    scaling: &CanonicalScaling<T>,
) -> Result<VoronoiCertificate<T>> {
    let d = p.dim();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).collect();
    let m = pairs.len();
    let k = graph.component_count();
    let facets = p.polytope().facets();

    // rows: one per facet and coordinate; columns: G entries then c_k
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (f, facet) in facets.iter().enumerate() {
        let t = p.facet_vector(f);
        for r in 0..d {
            let mut row = vec![T::zero(); m + k];
            for (col, &(i, j)) in pairs.iter().enumerate() {
                if i == r {
                    row[col] = row[col].clone() + t[j].clone();
                }
                if j == r && i != j {
                    row[col] = row[col].clone() + t[i].clone();
                }
            }
            let coeff = scaling.values[f].clone() * facet.normal[r].clone();
            row[m + graph.component_of(f)] = -coeff.clone();
            rows.push(row);
            rhs.push(coeff);
        }
    }
    let to_gram = |g: &[T]| -> Matrix<T> {
        let mut out = Matrix::zeros(d, d);
        for (col, &(i, j)) in pairs.iter().enumerate() {
            out.set(i, j, g[col].clone());
            out.set(j, i, g[col].clone());
        }
        out
    };

    let mut candidate = None;
    // equal factors first: the natural choice, and the one that recovers a
    // generating form exactly when P splits into several components
    let g_only: Vec<Vec<T>> = rows.iter().map(|r| r[..m].to_vec()).collect();
    if let Some(sol) = solve_linear(&Matrix::from_rows(&g_only)?, &Vector(rhs))? {
        let g = to_gram(&sol.particular);
        if is_positive_definite(&g)? {
            candidate = Some(g);
        }
    }

    let mut basis_forms = Vec::new();
    if candidate.is_none() {
        let kernel = nullspace(&Matrix::from_rows(&rows)?);
        basis_forms = kernel.iter().map(|v| to_gram(&v.0[..m])).collect();
        let dim = kernel.len().min(MAX_SEARCH_DIM);
        let weights = [T::zero(), T::one(), -T::one()];
        'search: for combo in (0..dim).map(|_| weights.iter()).multi_cartesian_product() {
            if combo.iter().all(|w| w.is_zero()) {
                continue;
            }
            let mut v = Vector::zeros(m + k);
            for (w, b) in combo.iter().zip(&kernel) {
                v = &v + &b.scale(w);
            }
            if v.0[m..].iter().all(|c| c.is_positive()) {
                let g = to_gram(&v.0[..m]);
                if is_positive_definite(&g)? {
                    candidate = Some(g);
                    break 'search;
                }
            }
        }
    }

    let Some(g) = candidate else {
        return Ok(VoronoiCertificate {
            scaling: Some(scaling.clone()),
            gram: None,
            verdict: CertificateVerdict::FormNotPd { basis: basis_forms },
        });
    };
    let g = g.primitive();
    let cell = p.lattice(g.clone())?.dv_cell()?;
    let verdict = if cell.vertices() == p.polytope().vertices() {
        CertificateVerdict::Certified
    } else {
        CertificateVerdict::DvMismatch
    };
    Ok(VoronoiCertificate {
        scaling: Some(scaling.clone()),
        gram: Some(g),
        verdict,
    })
}
