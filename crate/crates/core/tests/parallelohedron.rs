use std::collections::{BTreeMap, BTreeSet};

use parallo::catalog::{catalog, SOLIDS};
use parallo::exact::determinant;
use parallo::parallelohedron::{venkov_check, DelonType, VenkovVerdict, VenkovWitness};
use parallo::scaling::RidgeGraph;
use parallo::{Error, Parallelohedron, RatPolytope, RatVector, Rational, Scalar};
use serde_json::{json, Value};

fn q(n: i64, d: i64) -> Rational {
    Rational::from_frac(n, d)
}

fn solid(name: &str) -> Parallelohedron {
    let p = catalog::<Rational>(name).unwrap().polytope().unwrap();
    Parallelohedron::new(&p).unwrap()
}

fn golden(name: &str, key: &str) -> Value {
    catalog::<Rational>(name).unwrap().golden(key).unwrap_or_else(|| panic!("{name} has no {key}")).value.clone()
}

fn octahedron() -> RatPolytope {
    RatPolytope::from_vertices((0..3).flat_map(|i| [1, -1].map(|s| RatVector::unit(3, i).scale(&q(s, 1)))).collect())
        .unwrap()
}

fn pentagon_prism() -> RatPolytope {
    let base = [(0, 0), (2, 0), (3, 2), (1, 3), (-1, 2)];
    RatPolytope::from_vertices(
        base.iter().flat_map(|&(x, y)| [0, 1].map(|z| RatVector::from_i64(&[x, y, z]))).collect(),
    )
    .unwrap()
}

#[test]
fn venkov_verdicts() {
    assert_eq!(venkov_check(&solid("cube").polytope().clone()).unwrap(), VenkovVerdict::Pass);
    assert_eq!(venkov_check(&solid("hexagonal-prism").polytope().clone()).unwrap(), VenkovVerdict::Pass);
    assert!(matches!(
        venkov_check(&octahedron()).unwrap(),
        VenkovVerdict::Fail(VenkovWitness::FacetNotCentrallySymmetric { .. })
    ));
    assert_eq!(
        venkov_check(&pentagon_prism()).unwrap(),
        VenkovVerdict::Fail(VenkovWitness::NotCentrallySymmetric)
    );
    assert!(matches!(Parallelohedron::new(&octahedron()), Err(Error::NotParallelohedron(_))));
}

#[test]
fn symmetric_octagon_fails_on_belts() {
    let pts = [(2, 1), (1, 2), (-1, 2), (-2, 1), (-2, -1), (-1, -2), (1, -2), (2, -1)];
    let octagon = RatPolytope::from_vertices(pts.iter().map(|&(x, y)| RatVector::from_i64(&[x, y])).collect()).unwrap();
    let VenkovVerdict::Fail(w) = venkov_check(&octagon).unwrap() else {
        panic!("an octagon does not tile the plane by translation");
    };
    assert!(!matches!(w, VenkovWitness::NotCentrallySymmetric | VenkovWitness::FacetNotCentrallySymmetric { .. }));
}

#[test]
fn translated_input_is_recentered() {
    let p = solid("cube").polytope().clone();
    let moved = p.apply_affine(&parallo::RatMatrix::identity(3), &RatVector::from_i64(&[5, -2, 7])).unwrap();
    let par = Parallelohedron::new(&moved).unwrap();
    assert_eq!(par.polytope().symmetry_center(), Some(RatVector::zeros(3)));
}

#[test]
fn belt_lengths() {
    let lengths = |name: &str| {
        let mut l: Vec<usize> = solid(name).belts().iter().map(|b| b.len()).collect();
        l.sort();
        l
    };
    assert_eq!(lengths("cube"), vec![4, 4, 4]);
    assert_eq!(lengths("hexagonal-prism"), vec![4, 4, 4, 6]);
    assert_eq!(lengths("truncated-octahedron"), vec![6; 6]);
    for name in SOLIDS {
        assert_eq!(json!(lengths(name)), golden(name, "belt_lengths"), "{name}");
    }
}

#[test]
fn belts_cover_every_ridge_once() {
    for name in SOLIDS {
        let p = solid(name);
        let mut seen = BTreeSet::new();
        for (i, belt) in p.belts().iter().enumerate() {
            assert!(belt.len() == 4 || belt.len() == 6);
            let half = belt.len() / 2;
            for k in 0..belt.len() {
                assert_eq!(p.opposite(belt.facets[k]), belt.facets[(k + half) % belt.len()]);
                let r = belt.ridges[k];
                assert!(seen.insert(r));
                assert_eq!(p.belt_of(r), Some(i));
                assert_eq!(p.ridge_primitive(r), belt.is_primitive());
                let (a, b) = p.ridge_facets(r);
                let pair = BTreeSet::from([belt.facets[k], belt.facets[(k + 1) % belt.len()]]);
                assert_eq!(BTreeSet::from([a, b]), pair);
            }
        }
        assert_eq!(seen.len(), p.ridge_count(), "{name}");
    }
}

#[test]
fn neighbors_meet_in_a_facet() {
    for name in SOLIDS {
        let par = solid(name);
        let p = par.polytope();
        for (i, t) in par.facet_vectors().iter().enumerate() {
            assert_eq!(par.facet_vector(par.opposite(i)), &-t);
            let face = &p.face(p.face_lattice().facet_face(i)).vertices;
            for (v, x) in p.vertices().iter().enumerate() {
                assert_eq!(p.contains(&(x - t)), face.contains(&v), "{name} facet {i} vertex {v}");
            }
            // the offset equals half the normal's pairing with the facet vector
            assert_eq!(p.facet(i).offset, p.facet(i).normal.dot(t) * q(1, 2));
        }
    }
}

#[test]
fn dual_cells_by_codimension() {
    let to = solid("truncated-octahedron");
    let p = to.polytope();
    for i in 0..p.facets().len() {
        let cell = to.dual_cell(p.face_lattice().facet_face(i)).unwrap();
        assert_eq!(cell.centers, {
            let mut c = vec![RatVector::zeros(3), to.facet_vector(i).clone()];
            c.sort();
            c
        });
    }
    for &r in p.ridges() {
        assert_eq!(to.dual_cell(r).unwrap().centers.len(), 3);
    }

    let cube = solid("cube");
    let edge = cube.polytope().ridges()[0];
    let cell = cube.dual_cell(edge).unwrap();
    assert_eq!(cell.centers.len(), 4);
    assert_eq!(cell.hull.as_ref().unwrap().vertices().len(), 4);
    let vertex = cube.polytope().face_lattice().of_dim(0)[0];
    let cell = cube.dual_cell(vertex).unwrap();
    assert_eq!(cell.centers.len(), 8);
    assert_eq!(cube.classify_dual3(&cell), Ok(DelonType::Cube));
}

#[test]
fn delone_census() {
    let mut realized = BTreeSet::new();
    for name in SOLIDS {
        let (census, anomalies) = solid(name).dual3_census().unwrap();
        assert!(anomalies.is_empty(), "{name}");
        let named: BTreeMap<&str, usize> = census.iter().map(|(t, n)| (t.name(), *n)).collect();
        assert_eq!(json!(named), golden(name, "dual3_census"), "{name}");
        assert_eq!(census.values().sum::<usize>(), solid(name).polytope().face_lattice().of_dim(0).len());
        realized.extend(census.into_keys());
    }
    assert_eq!(realized, DelonType::ALL.into_iter().collect());
}

#[test]
fn primitivity_profiles() {
    for name in SOLIDS {
        assert_eq!(json!(solid(name).primitivity_profile().unwrap()), golden(name, "primitivity"), "{name}");
    }
}

#[test]
fn two_irreducibility() {
    assert!(solid("rhombic-dodecahedron").is_k_irreducible(2).unwrap().is_irreducible());
    assert!(solid("truncated-octahedron").is_k_irreducible(2).unwrap().is_irreducible());
    assert!(!solid("cube").is_k_irreducible(2).unwrap().is_irreducible());
    assert!(!solid("elongated-dodecahedron").is_k_irreducible(2).unwrap().is_irreducible());
    for name in SOLIDS {
        let got = solid(name).is_k_irreducible(2).unwrap().is_irreducible();
        assert_eq!(json!(got), golden(name, "two_irreducible"), "{name}");
    }
    assert!(solid("cube").is_k_irreducible(1).is_err());
}

#[test]
fn ridge_graph_components() {
    for name in SOLIDS {
        let p = solid(name);
        let g = RidgeGraph::build(&p).unwrap();
        assert_eq!(json!(g.component_count()), golden(name, "ridge_graph_components"), "{name}");
    }
}

#[test]
fn lattice_of_centers() {
    let rd = solid("rhombic-dodecahedron");
    let basis = rd.lattice_basis();
    assert_eq!(basis.len(), 3);
    // the facet vectors of the rhombic dodecahedron generate the FCC lattice
    let fcc = catalog::<Rational>("lattice-FCC").unwrap();
    let l = fcc.lattice().unwrap();
    for t in rd.facet_vectors() {
        assert!(l.contains(t));
    }
    for b in basis {
        assert!(l.contains(b));
        assert!(b.iter().all(|x| x.is_integer()));
    }
    let m = parallo::RatMatrix::from_row_vectors(basis).unwrap();
    let det = |m: &parallo::RatMatrix| {
        let d = determinant(m).unwrap();
        if d < q(0, 1) { -d } else { d }
    };
    assert_eq!(det(&m), det(l.basis()));
}
