//! Built-in reference inputs: the five combinatorial types of 3-dimensional
//! parallelohedra and a handful of lattices whose Voronoi cells are computed
//! on load.
//!
//! Every entry carries golden values. Each value records where it comes from:
//! a published statement, an elementary observation, or an exact enumeration
//! that was computed once by an independent script and frozen here.

use serde::Serialize;
use serde_json::{json, Value};

use crate::exact::{Matrix, Scalar, Vector};
use crate::lattice::Lattice;
use crate::polytope::Polytope;
use crate::{Error, Result, Rational};

pub const NAMES: [&str; 11] = [
    "cube",
    "hexagonal-prism",
    "rhombic-dodecahedron",
    "elongated-dodecahedron",
    "truncated-octahedron",
    "lattice-Z2",
    "lattice-Z3",
    "lattice-A2-gram",
    "lattice-FCC",
    "lattice-BCC",
    "lattice-D4",
];

/// The five three-dimensional parallelohedra.
pub const SOLIDS: [&str; 5] = [
    "cube",
    "hexagonal-prism",
    "rhombic-dodecahedron",
    "elongated-dodecahedron",
    "truncated-octahedron",
];

/// Origin of a golden value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Stated in the published literature on these solids.
    Published,
    /// Immediate from the definitions.
    Elementary,
    /// Computed by an independent exact enumeration and frozen.
    Enumerated,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Golden {
    pub key: &'static str,
    pub value: Value,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub enum Source<T> {
    Polytope(Polytope<T>),
    Lattice(Lattice<T>),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry<T = Rational> {
    pub name: &'static str,
    pub description: &'static str,
    pub source: Source<T>,
    pub golden: Vec<Golden>,
}

impl<T: Scalar> CatalogEntry<T> {
    /// The polytope under test: the given solid, or the lattice's Voronoi cell.
    pub fn polytope(&self) -> Result<Polytope<T>> {
        match &self.source {
            Source::Polytope(p) => Ok(p.clone()),
            Source::Lattice(l) => l.dv_cell(),
        }
    }

    pub fn lattice(&self) -> Option<&Lattice<T>> {
        match &self.source {
            Source::Lattice(l) => Some(l),
            Source::Polytope(_) => None,
        }
    }

    pub fn golden(&self, key: &str) -> Option<&Golden> {
        self.golden.iter().find(|g| g.key == key)
    }
}

fn g(key: &'static str, value: Value, provenance: Provenance) -> Golden {
    Golden {
        key,
        value,
        provenance,
    }
}

fn points<T: Scalar>(rows: &[[i64; 3]], denom: i64) -> Vec<Vector<T>> {
    rows.iter()
        .map(|r| Vector(r.iter().map(|&x| T::from_frac(x, denom)).collect()))
        .collect()
}

fn matrix<T: Scalar>(rows: &[&[i64]], denom: i64) -> Matrix<T> {
    let rows: Vec<Vec<T>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| T::from_frac(x, denom)).collect())
        .collect();
    Matrix::from_rows(&rows).expect("catalog matrices are rectangular")
}

/// Hexagon `(1,0), (0,1), (−1,1), (−1,0), (0,−1), (1,−1)` times `[−1/2, 1/2]`.
const PRISM: [[i64; 3]; 12] = [
    [2, 0, 1],
    [0, 2, 1],
    [-2, 2, 1],
    [-2, 0, 1],
    [0, -2, 1],
    [2, -2, 1],
    [2, 0, -1],
    [0, 2, -1],
    [-2, 2, -1],
    [-2, 0, -1],
    [0, -2, -1],
    [2, -2, -1],
];

/// Rhombic dodecahedron stretched along the z axis: the zonotope spanned by
/// `(±1, ±1, 1)` and `(0, 0, 2)`, each generator taken from `−g/2` to `g/2`.
const ELONGATED: [[i64; 3]; 18] = [
    [-2, 0, -1],
    [-2, 0, 1],
    [-1, -1, -2],
    [-1, -1, 2],
    [-1, 1, -2],
    [-1, 1, 2],
    [0, -2, -1],
    [0, -2, 1],
    [0, 0, -3],
    [0, 0, 3],
    [0, 2, -1],
    [0, 2, 1],
    [1, -1, -2],
    [1, -1, 2],
    [1, 1, -2],
    [1, 1, 2],
    [2, 0, -1],
    [2, 0, 1],
];

pub fn catalog<T: Scalar>(name: &str) -> Result<CatalogEntry<T>> {
    use Provenance::*;
    let entry = match name {
        "cube" => CatalogEntry {
            name: "cube",
            description: "unit cube centered at the origin",
            source: Source::Polytope(Polytope::from_vertices(
                (0..8)
                    .map(|m: i64| {
                        Vector((0..3).map(|i| T::from_frac(2 * ((m >> i) & 1) - 1, 2)).collect())
                    })
                    .collect(),
            )?),
            golden: vec![
                g("f_vector", json!([8, 12, 6]), Elementary),
                g("belt_lengths", json!([4, 4, 4]), Elementary),
                g("primitivity", json!([true, false, false]), Elementary),
                g("ridge_graph_components", json!(6), Elementary),
                g("delta_components", json!(6), Published),
                g("delta_cells", json!([0, 0, 6]), Published),
                g("delta_chi", json!([1, 1, 1, 1, 1, 1]), Elementary),
                g("delta_h1_ranks", json!([0, 0, 0, 0, 0, 0]), Published),
                g("pi_components", json!(3), Published),
                g("pi_cells", json!([0, 0, 3]), Published),
                g("dual3_census", json!({"cube": 8}), Elementary),
                g("two_irreducible", json!(false), Elementary),
                g("scaling", json!({"1": 6}), Elementary),
            ],
        },
        "hexagonal-prism" => CatalogEntry {
            name: "hexagonal-prism",
            description: "prism over a centrally symmetric lattice hexagon",
            source: Source::Polytope(Polytope::from_vertices(points(&PRISM, 2))?),
            golden: vec![
                g("f_vector", json!([12, 18, 8]), Elementary),
                g("belt_lengths", json!([4, 4, 4, 6]), Enumerated),
                g("primitivity", json!([true, false, false]), Elementary),
                g("ridge_graph_components", json!(3), Enumerated),
                g("delta_components", json!(3), Published),
                g("delta_cells", json!([0, 6, 8]), Published),
                g("delta_chi", json!([0, 1, 1]), Enumerated),
                g("delta_h1_ranks", json!([0, 0, 1]), Published),
                g("pi_components", json!(2), Published),
                g("pi_h1_ranks", json!([0, 1]), Published),
                g("pi_orientable", json!([true, false]), Published),
                g("dual3_census", json!({"triangular-prism": 12}), Enumerated),
                g("two_irreducible", json!(false), Elementary),
                g("scaling", json!({"1": 8}), Enumerated),
            ],
        },
        "rhombic-dodecahedron" => {
            let l = fcc();
            CatalogEntry {
                name: "rhombic-dodecahedron",
                description: "Voronoi cell of the face-centered cubic lattice",
                source: Source::Polytope(l.dv_cell()?),
                golden: vec![
                    g("f_vector", json!([14, 24, 12]), Elementary),
                    g("belt_lengths", json!([6, 6, 6, 6]), Enumerated),
                    g("primitivity", json!([true, true, false]), Published),
                    g("ridge_graph_components", json!(1), Enumerated),
                    g("delta_components", json!(1), Published),
                    g("delta_compact", json!([true]), Published),
                    g("delta_chi", json!([2]), Published),
                    g("delta_h1_ranks", json!([0]), Published),
                    g("delta_cells", json!([14, 24, 12]), Elementary),
                    g("pi_components", json!(1), Elementary),
                    g("pi_h1_ranks", json!([0]), Published),
                    g("dual3_census", json!({"tetrahedron": 8, "octahedron": 6}), Enumerated),
                    g("two_irreducible", json!(true), Published),
                    g("scaling", json!({"1": 12}), Enumerated),
                ],
            }
        }
        "elongated-dodecahedron" => CatalogEntry {
            name: "elongated-dodecahedron",
            description: "rhombic dodecahedron elongated along a fourfold axis",
            source: Source::Polytope(Polytope::from_vertices(points(&ELONGATED, 2))?),
            golden: vec![
                g("f_vector", json!([18, 28, 12]), Enumerated),
                g("belt_lengths", json!([4, 6, 6, 6, 6]), Enumerated),
                g("primitivity", json!([true, false, false]), Enumerated),
                g("ridge_graph_components", json!(1), Enumerated),
                g("delta_components", json!(1), Published),
                g("delta_cells", json!([10, 24, 12]), Enumerated),
                g("delta_chi", json!([-2]), Enumerated),
                g("delta_h1_ranks", json!([3]), Published),
                g("pi_chi", json!([-1]), Enumerated),
                g("pi_h1_ranks", json!([2]), Enumerated),
                g("pi_components", json!(1), Enumerated),
                g("pi_h1_rank_published", json!(1), Published),
                g("dual3_census", json!({"quadrangular-pyramid": 10, "tetrahedron": 8}), Enumerated),
                g("two_irreducible", json!(false), Enumerated),
                g("scaling", json!({"1": 12}), Enumerated),
            ],
        },
        "truncated-octahedron" => {
            let l = bcc();
            CatalogEntry {
                name: "truncated-octahedron",
                description: "Voronoi cell of the body-centered cubic lattice",
                source: Source::Polytope(l.dv_cell()?),
                golden: vec![
                    g("f_vector", json!([24, 36, 14]), Enumerated),
                    g("belt_lengths", json!([6, 6, 6, 6, 6, 6]), Published),
                    g("primitivity", json!([true, true, true]), Published),
                    g("ridge_graph_components", json!(1), Enumerated),
                    g("delta_components", json!(1), Published),
                    g("delta_compact", json!([true]), Published),
                    g("delta_chi", json!([2]), Published),
                    g("delta_h1_ranks", json!([0]), Published),
                    g("delta_cells", json!([24, 36, 14]), Elementary),
                    g("pi_components", json!(1), Elementary),
                    g("pi_h1_ranks", json!([0]), Published),
                    g("dual3_census", json!({"tetrahedron": 24}), Enumerated),
                    g("two_irreducible", json!(true), Published),
                    g("scaling", json!({"1": 8, "2": 6}), Enumerated),
                ],
            }
        }
        "lattice-Z2" => lattice_entry(
            "lattice-Z2",
            "integer lattice in the plane",
            Lattice::euclidean(Matrix::identity(2))?,
            vec![g("f_vector", json!([4, 4]), Elementary)],
        ),
        "lattice-Z3" => lattice_entry(
            "lattice-Z3",
            "integer lattice in space",
            Lattice::euclidean(Matrix::identity(3))?,
            vec![g("f_vector", json!([8, 12, 6]), Elementary)],
        ),
        "lattice-A2-gram" => lattice_entry(
            "lattice-A2-gram",
            "hexagonal lattice as the integer lattice with form [[2,1],[1,2]]",
            Lattice::new(Matrix::identity(2), matrix(&[&[2, 1], &[1, 2]], 1))?,
            vec![
                g("f_vector", json!([6, 6]), Enumerated),
                g("relevant_vectors", json!(6), Enumerated),
            ],
        ),
        "lattice-FCC" => lattice_entry(
            "lattice-FCC",
            "face-centered cubic lattice",
            fcc(),
            vec![
                g("f_vector", json!([14, 24, 12]), Enumerated),
                g("relevant_vectors", json!(12), Enumerated),
            ],
        ),
        "lattice-BCC" => lattice_entry(
            "lattice-BCC",
            "body-centered cubic lattice",
            bcc(),
            vec![
                g("f_vector", json!([24, 36, 14]), Enumerated),
                g("relevant_vectors", json!(14), Enumerated),
            ],
        ),
        "lattice-D4" => lattice_entry(
            "lattice-D4",
            "checkerboard lattice in four dimensions; its Voronoi cell is the 24-cell",
            Lattice::euclidean(matrix(
                &[&[1, 1, 0, 0], &[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, -1]],
                1,
            ))?,
            vec![
                g("f_vector", json!([24, 96, 96, 24]), Published),
                g("relevant_vectors", json!(24), Published),
                g("belt_lengths", json!(vec![6; 16]), Enumerated),
                g("primitivity", json!([true, true, true]), Enumerated),
                g("ridge_graph_components", json!(1), Enumerated),
            ],
        ),
        other => return Err(Error::UnknownCatalog(other.to_string())),
    };
    Ok(entry)
}

fn lattice_entry<T: Scalar>(
    name: &'static str,
    description: &'static str,
    lattice: Lattice<T>,
    golden: Vec<Golden>,
) -> CatalogEntry<T> {
    CatalogEntry {
        name,
        description,
        source: Source::Lattice(lattice),
        golden,
    }
}

fn fcc<T: Scalar>() -> Lattice<T> {
    Lattice::euclidean(matrix(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]], 1)).expect("FCC basis is valid")
}

fn bcc<T: Scalar>() -> Lattice<T> {
    Lattice::euclidean(matrix(&[&[2, 0, 0], &[0, 2, 0], &[1, 1, 1]], 2)).expect("BCC basis is valid")
}
