//! Lattices with a rational metric, their Voronoi-relevant vectors and
//! Dirichlet–Voronoi cells.
//!
//! Everything lives in ambient coordinates: lattice vectors are integer
//! combinations of the basis rows and the metric is `⟨x, y⟩ = xᵀ G y`.

use itertools::Itertools;
use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use crate::exact::{floor_sqrt, inverse, is_positive_definite, Matrix, Scalar, Vector};
use crate::polytope::io::{parse_matrix, vector_text, RatText};
use crate::polytope::Polytope;
use crate::{Error, Result, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice<T = Rational> {
    basis: Matrix<T>,
    gram: Matrix<T>,
    /// Inverse of the basis, mapping ambient vectors to coefficients.
    inv_basis: Matrix<T>,
    /// Gram matrix in basis coordinates, `B G Bᵀ`.
    coeff_gram: Matrix<T>,
}

impl<T: Scalar> Lattice<T> {
    /// `basis` rows generate the lattice; `gram` must be symmetric positive definite.
    pub fn new(basis: Matrix<T>, gram: Matrix<T>) -> Result<Self> {
        let d = basis.rows();
        if !basis.is_square() || gram.rows() != d || !gram.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "basis {}x{} with gram {}x{}",
                basis.rows(),
                basis.cols(),
                gram.rows(),
                gram.cols()
            )));
        }
        if !is_positive_definite(&gram)? {
            return Err(Error::InvalidArgument("gram form is not positive definite".into()));
        }
        let inv_basis = inverse(&basis)?;
        let coeff_gram = basis.mul(&gram)?.mul(&basis.transpose())?;
        Ok(Lattice {
            basis,
            gram,
            inv_basis,
            coeff_gram,
        })
    }

    /// Lattice with the standard Euclidean metric.
    pub fn euclidean(basis: Matrix<T>) -> Result<Self> {
        let d = basis.rows();
        Self::new(basis, Matrix::identity(d))
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn gram(&self) -> &Matrix<T> {
        &self.gram
    }

    /// Same lattice, different metric.
    pub fn with_gram(&self, gram: Matrix<T>) -> Result<Self> {
        Self::new(self.basis.clone(), gram)
    }

    pub fn norm(&self, x: &Vector<T>) -> T {
        self.gram.bilinear(x, x)
    }

    pub fn inner(&self, x: &Vector<T>, y: &Vector<T>) -> T {
        self.gram.bilinear(x, y)
    }

    /// Basis coefficients of an ambient vector (`x = kᵀ B`).
    pub fn coefficients(&self, x: &Vector<T>) -> Vector<T> {
        self.inv_basis
            .transpose()
            .mul_vec(x)
            .expect("dimension checked by caller")
    }

    /// Ambient vector with the given basis coefficients.
    pub fn point(&self, coeffs: &Vector<T>) -> Vector<T> {
        self.basis
            .transpose()
            .mul_vec(coeffs)
            .expect("coefficient vector has lattice dimension")
    }

    pub fn contains(&self, x: &Vector<T>) -> bool {
        x.dim() == self.dim() && self.coefficients(x).iter().all(Scalar::is_integer)
    }

    /// Lattice vectors `v` with `‖v − center‖² ≤ bound`, sorted.
    pub fn vectors_within(&self, center: &Vector<T>, bound: &T) -> Vec<Vector<T>> {
        let c = self.coefficients(center);
        enumerate(&self.coeff_gram, &c, bound, None)
            .into_iter()
            .map(|k| self.point(&k))
            .sorted()
            .collect()
    }

    /// All vectors of minimal positive norm in the coset `c + 2Λ`.
    ///
    /// For `c ∈ 2Λ` these are the minimal nonzero vectors of `2Λ`.
    pub fn shortest_in_coset(&self, c: &Vector<T>) -> Result<Vec<Vector<T>>> {
        if c.dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a rank-{} lattice",
                c.dim(),
                self.dim()
            )));
        }
        let k = self.coefficients(c);
        if !k.iter().all(Scalar::is_integer) {
            return Err(Error::NotInLattice(c.to_string()));
        }
        let parity: Vec<bool> = k.iter().map(|x| x.numer_int().is_odd()).collect();
        let q = &self.coeff_gram;
        let bound = if parity.iter().any(|&p| p) {
            let r = Vector(parity.iter().map(|&p| if p { T::one() } else { T::zero() }).collect());
            q.bilinear(&r, &r)
        } else {
            let min_diag = (0..self.dim()).map(|i| q[(i, i)].clone()).min().expect("rank >= 1");
            min_diag * T::from_i64(4)
        };
        let zero = Vector::zeros(self.dim());
        let found = enumerate(q, &zero, &bound, Some(&parity));
        let normed: Vec<(T, Vector<T>)> = found
            .into_iter()
            .filter(|k| !k.is_zero())
            .map(|k| (q.bilinear(&k, &k), k))
            .collect();
        let Some(min) = normed.iter().map(|(n, _)| n.clone()).min() else {
            return Ok(Vec::new());
        };
        Ok(normed
            .into_iter()
            .filter(|(n, _)| *n == min)
            .map(|(_, k)| self.point(&k))
            .sorted()
            .collect())
    }

    /// Voronoi-relevant vectors: `v` whose coset mod `2Λ` has exactly `±v` as minimizers.
    pub fn relevant_vectors(&self) -> Vec<Vector<T>> {
        let d = self.dim();
        let mut out = Vec::new();
        for bits in 1u32..(1 << d) {
            let r = Vector((0..d).map(|i| T::from_i64(((bits >> i) & 1) as i64)).collect());
            let mins = self
                .shortest_in_coset(&self.point(&r))
                .expect("coset representative is a lattice vector");
            if mins.len() == 2 {
                out.extend(mins);
            }
        }
        out.sort();
        out
    }

    /// The Dirichlet–Voronoi cell `{x : ⟨x, v⟩ ≤ ⟨v, v⟩/2 for all relevant v}`.
    pub fn dv_cell(&self) -> Result<Polytope<T>> {
        let halfspaces = self
            .relevant_vectors()
            .into_iter()
            .map(|v| {
                let n = self.gram.mul_vec(&v).expect("dimensions agree");
                let b = self.norm(&v) / T::two();
                (n, b)
            })
            .collect();
        Polytope::from_halfspaces(halfspaces)
    }

    /// Translates `v ∈ Λ` with `x − v` in `cell` (closed), and those with `x − v`
    /// in its interior. `cell` is assumed to contain the origin.
    pub fn translates_containing(
        &self,
        cell: &Polytope<T>,
        x: &Vector<T>,
    ) -> (Vec<Vector<T>>, Vec<Vector<T>>) {
        let radius = cell
            .vertices()
            .iter()
            .map(|v| self.norm(v))
            .max()
            .unwrap_or_else(T::zero);
        let mut closed = Vec::new();
        let mut interior = Vec::new();
        for v in self.vectors_within(x, &radius) {
            let y = x - &v;
            if cell.contains(&y) {
                if cell.contains_in_interior(&y) {
                    interior.push(v.clone());
                }
                closed.push(v);
            }
        }
        (closed, interior)
    }
}

/// Exact short-vector enumeration (Fincke–Pohst).
///
/// Returns every integer `k` with `(k − c)ᵀ Q (k − c) ≤ bound`, optionally
/// restricted to `k_i ≡ parity_i (mod 2)`.
fn enumerate<T: Scalar>(
    q: &Matrix<T>,
    center: &Vector<T>,
    bound: &T,
    parity: Option<&[bool]>,
) -> Vec<Vector<T>> {
    let n = q.rows();
    // Q(x) = Σ_i d_i (x_i + Σ_{j>i} μ_ij x_j)²
    let mut m = q.to_rows();
    for i in 0..n {
        for j in i + 1..n {
            let t = m[i][j].clone();
            m[j][i] = t.clone();
            m[i][j] = t / m[i][i].clone();
        }
        for k in i + 1..n {
            for l in k..n {
                let delta = m[k][i].clone() * m[i][l].clone();
                m[k][l] = m[k][l].clone() - delta;
            }
        }
    }
    let mut out = Vec::new();
    let mut x = vec![T::zero(); n];
    descend(&m, center, parity, n, bound.clone(), &mut x, &mut out);
    out
}

fn descend<T: Scalar>(
    m: &[Vec<T>],
    center: &Vector<T>,
    parity: Option<&[bool]>,
    level: usize,
    remaining: T,
    x: &mut Vec<T>,
    out: &mut Vec<Vector<T>>,
) {
    if level == 0 {
        out.push(Vector(x.clone()));
        return;
    }
    let i = level - 1;
    // offset of coordinate i given the already fixed coordinates above it
    let mut shift = -center[i].clone();
    for j in i + 1..x.len() {
        shift = shift + m[i][j].clone() * (x[j].clone() - center[j].clone());
    }
    let d = &m[i][i];
    let s = T::from_int(floor_sqrt(&(remaining.clone() / d.clone())));
    let lo = (-shift.clone()).floor() - s.clone() - T::one();
    let hi = (-shift.clone()).floor() + s + T::two();
    let mut k = lo;
    while k <= hi {
        let wanted = parity.map(|p| p[i]);
        if wanted.is_none_or(|odd| k.numer_int().is_odd() == odd) {
            let y = k.clone() + shift.clone();
            let used = d.clone() * y.clone() * y;
            if used <= remaining {
                x[i] = k.clone();
                descend(m, center, parity, i, remaining.clone() - used, x, out);
            }
        }
        k = k + T::one();
    }
    x[i] = T::zero();
}

/// `{"basis": [[...]], "gram": [[...]]}`; `gram` defaults to the identity.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub basis: Vec<Vec<RatText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<RatText>>>,
}

impl LatticeDoc {
    pub fn from_lattice<T: Scalar>(l: &Lattice<T>) -> Self {
        LatticeDoc {
            basis: l.basis.row_vectors().iter().map(vector_text).collect(),
            gram: Some(l.gram.row_vectors().iter().map(vector_text).collect()),
        }
    }

    pub fn to_lattice<T: Scalar>(&self) -> Result<Lattice<T>> {
        let basis = parse_matrix(&self.basis, "basis")?;
        if !basis.is_square() {
            return Err(Error::parse("basis", "basis must be square"));
        }
        let gram = match &self.gram {
            Some(g) => parse_matrix(g, "gram")?,
            None => Matrix::identity(basis.rows()),
        };
        if gram.rows() != basis.rows() || !gram.is_square() {
            return Err(Error::parse("gram", "gram must be square of the basis dimension"));
        }
        if !gram.is_symmetric() {
            return Err(Error::parse("gram", "gram must be symmetric"));
        }
        Lattice::new(basis, gram).map_err(|e| match e {
            Error::Singular => Error::parse("basis", "basis is singular"),
            Error::InvalidArgument(m) => Error::parse("gram", m),
            other => other,
        })
    }
}

pub fn lattice_from_json<T: Scalar>(text: &str) -> Result<Lattice<T>> {
    let doc: LatticeDoc = serde_json::from_str(text)?;
    doc.to_lattice()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{RatLattice, RatMatrix, RatVector};

    fn z(d: usize) -> RatLattice {
        Lattice::euclidean(RatMatrix::identity(d)).unwrap()
    }

    fn bcc() -> RatLattice {
        let h = Rational::half();
        let b = RatMatrix::from_rows(&[
            vec![Rational::from_i64(1), Rational::from_i64(0), Rational::from_i64(0)],
            vec![Rational::from_i64(0), Rational::from_i64(1), Rational::from_i64(0)],
            vec![h.clone(), h.clone(), h],
        ])
        .unwrap();
        Lattice::euclidean(b).unwrap()
    }

    fn a2() -> RatLattice {
        Lattice::new(
            RatMatrix::identity(2),
            RatMatrix::from_i64(&[&[2, 1], &[1, 2]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn coset_minimizers_in_z3() {
        let l = z(3);
        let e1 = RatVector::from_i64(&[1, 0, 0]);
        assert_eq!(
            l.shortest_in_coset(&e1).unwrap(),
            vec![RatVector::from_i64(&[-1, 0, 0]), e1.clone()]
        );
        let m = l.shortest_in_coset(&RatVector::from_i64(&[1, 1, 0])).unwrap();
        assert_eq!(m.len(), 4);
        assert!(m.contains(&RatVector::from_i64(&[1, -1, 0])));
        let zero = l.shortest_in_coset(&RatVector::zeros(3)).unwrap();
        assert_eq!(zero.len(), 6);
        assert!(matches!(
            l.shortest_in_coset(&RatVector::new(vec![Rational::half(), Rational::from_i64(0), Rational::from_i64(0)])),
            Err(Error::NotInLattice(_))
        ));
    }

    #[test]
    fn bcc_body_diagonal_coset() {
        let l = bcc();
        let h = Rational::half();
        let v = RatVector::new(vec![h.clone(), h.clone(), h]);
        assert_eq!(l.shortest_in_coset(&v).unwrap(), vec![-v.clone(), v]);
    }

    #[test]
    fn relevant_vector_counts() {
        assert_eq!(z(3).relevant_vectors().len(), 6);
        assert_eq!(bcc().relevant_vectors().len(), 14);
        assert_eq!(
            a2().relevant_vectors(),
            vec![
                RatVector::from_i64(&[-1, 0]),
                RatVector::from_i64(&[-1, 1]),
                RatVector::from_i64(&[0, -1]),
                RatVector::from_i64(&[0, 1]),
                RatVector::from_i64(&[1, -1]),
                RatVector::from_i64(&[1, 0]),
            ]
        );
    }

    #[test]
    fn voronoi_cells() {
        let cube = z(3).dv_cell().unwrap();
        assert_eq!(cube.face_lattice().f_vector(), vec![8, 12, 6, 1]);
        let to = bcc().dv_cell().unwrap();
        assert_eq!(to.face_lattice().f_vector(), vec![24, 36, 14, 1]);
        let hex = a2().dv_cell().unwrap();
        assert_eq!(hex.facets().len(), 6);
        assert!(hex.symmetry_center().unwrap().is_zero());
    }

    #[test]
    fn enumeration_with_center() {
        let l = z(2);
        let c = RatVector::new(vec![Rational::half(), Rational::half()]);
        // the four corners of the unit square around (1/2, 1/2)
        assert_eq!(l.vectors_within(&c, &Rational::half()).len(), 4);
        let (closed, interior) = l.translates_containing(&z(2).dv_cell().unwrap(), &c);
        assert_eq!(closed.len(), 4);
        assert!(interior.is_empty());
    }

    #[test]
    fn lattice_json() {
        let l: RatLattice = lattice_from_json(r#"{"basis": [["1","0"],["0","1"]], "gram": [["2","1"],["1","2"]]}"#).unwrap();
        assert_eq!(l, a2());
        let doc = serde_json::to_string(&LatticeDoc::from_lattice(&l)).unwrap();
        assert_eq!(lattice_from_json::<Rational>(&doc).unwrap(), l);
        let bad = r#"{"basis": [["1","0"],["0","1"]], "gram": [["1","2"],["2","1"]]}"#;
        assert!(matches!(lattice_from_json::<Rational>(bad), Err(Error::Parse { .. })));
        let default: RatLattice = lattice_from_json(r#"{"basis": [["1","1"],["1","-1"]]}"#).unwrap();
        assert!(default.gram().is_identity());
    }
}
