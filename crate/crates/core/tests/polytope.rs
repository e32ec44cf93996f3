use std::collections::BTreeSet;

use parallo::catalog::{catalog, SOLIDS};
use parallo::polytope::io::{polytope_from_json, polytope_to_json, to_off};
use parallo::{Error, RatMatrix, RatPolytope, RatVector, Rational, Scalar};

mod common;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_frac(n, d)
}

fn solid(name: &str) -> RatPolytope {
    catalog::<Rational>(name).unwrap().polytope().unwrap()
}

fn cube_halfspaces() -> Vec<(RatVector, Rational)> {
    (0..3)
        .flat_map(|i| {
            [1, -1].map(|s| {
                let mut n = vec![0; 3];
                n[i] = s;
                (RatVector::from_i64(&n), q(1, 2))
            })
        })
        .collect()
}

#[test]
fn cube_vertices_give_unit_normals() {
    let p = solid("cube");
    assert_eq!(p.facets().len(), 6);
    for f in p.facets() {
        assert_eq!(f.normal.iter().filter(|x| **x != q(0, 1)).count(), 1);
        assert_eq!(f.offset, q(1, 2));
    }
}

#[test]
fn cube_halfspaces_give_eight_vertices() {
    let p = RatPolytope::from_halfspaces(cube_halfspaces()).unwrap();
    assert_eq!(p.vertices().len(), 8);
    assert!(p.vertices().iter().all(|v| v.iter().all(|x| *x == q(1, 2) || *x == q(-1, 2))));
}

#[test]
fn bcc_facets_give_the_truncated_octahedron() {
    let mut hs = Vec::new();
    for s in 0..8 {
        let n: Vec<i64> = (0..3).map(|i| if (s >> i) & 1 == 1 { -1 } else { 1 }).collect();
        hs.push((RatVector::from_i64(&n), q(3, 4)));
    }
    hs.extend(cube_halfspaces());
    let p = RatPolytope::from_halfspaces(hs).unwrap();

    let mut expected = BTreeSet::new();
    for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let base = [q(0, 1), q(s1, 4), q(s2, 2)];
            expected.insert(RatVector::new(perm.iter().map(|&k| base[k].clone()).collect()));
        }
    }
    let got: BTreeSet<RatVector> = p.vertices().iter().cloned().collect();
    assert_eq!(got, expected);
    assert_eq!(p.face_lattice().f_vector(), vec![24, 36, 14, 1]);
    // the catalog builds the same solid as a Voronoi cell
    assert_eq!(solid("truncated-octahedron").vertices(), p.vertices());
}

#[test]
fn catalog_face_counts_and_euler() {
    let expected = [
        ("cube", [8, 12, 6]),
        ("hexagonal-prism", [12, 18, 8]),
        ("rhombic-dodecahedron", [14, 24, 12]),
        ("elongated-dodecahedron", [18, 28, 12]),
        ("truncated-octahedron", [24, 36, 14]),
    ];
    for (name, f) in expected {
        let p = solid(name);
        let got = p.face_lattice().f_vector();
        assert_eq!(&got[..3], &f, "{name}");
        assert_eq!(got[0] as i64 - got[1] as i64 + got[2] as i64, 2, "{name}");
    }
}

#[test]
fn face_lattice_is_graded() {
    for name in SOLIDS {
        let p = solid(name);
        let lat = p.face_lattice();
        for (i, f) in lat.faces().iter().enumerate() {
            for &g in lat.covered_by(i) {
                assert_eq!(lat.face(g).dim, f.dim + 1);
            }
            if f.dim > 0 {
                assert!(!lat.covers(i).is_empty());
            }
        }
        assert_eq!(lat.of_dim(3).len(), 1);
    }
}

#[test]
fn central_symmetry() {
    let cube = solid("cube");
    assert_eq!(cube.symmetry_center(), Some(RatVector::zeros(3)));

    let oct = RatPolytope::from_vertices(
        (0..3)
            .flat_map(|i| [1, -1].map(|s| RatVector::unit(3, i).scale(&q(s, 1))))
            .collect(),
    )
    .unwrap();
    assert_eq!(oct.symmetry_center(), Some(RatVector::zeros(3)));
    let tri = oct.face_lattice().facet_face(0);
    assert!(oct.face_symmetry_center(tri).is_none());

    let rd = solid("rhombic-dodecahedron");
    for i in 0..rd.facets().len() {
        let face = rd.face_lattice().facet_face(i);
        assert_eq!(rd.face(face).vertices.len(), 4);
        assert_eq!(rd.face_symmetry_center(face), Some(rd.face(face).center.clone()));
    }
}

#[test]
fn affine_examples() {
    let cube = solid("cube");
    let same = cube.apply_affine(&RatMatrix::identity(3), &RatVector::zeros(3)).unwrap();
    assert_eq!(same.vertices(), cube.vertices());
    assert_eq!(same.facets(), cube.facets());

    let boxed = cube
        .apply_affine(&RatMatrix::diagonal(&[q(1, 1), q(2, 1), q(3, 1)]), &RatVector::zeros(3))
        .unwrap();
    let mut offsets: Vec<Rational> = boxed.facets().iter().map(|f| f.offset.clone()).collect();
    offsets.sort();
    assert_eq!(offsets, vec![q(1, 2), q(1, 2), q(1, 1), q(1, 1), q(3, 2), q(3, 2)]);

    let singular = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]).unwrap();
    assert!(matches!(cube.apply_affine(&singular, &RatVector::zeros(3)), Err(Error::Singular)));
}

#[test]
fn unimodular_images_keep_the_face_lattice() {
    let mut rng = common::rng();
    for name in SOLIDS {
        let p = solid(name);
        for _ in 0..10 {
            let a = common::unimodular(&mut rng, 3);
            let shift = common::random_shift(&mut rng, 3);
            let image = p.apply_affine(&a, &shift).unwrap();
            assert!(common::affine_vertex_map(&p, &image, &a, &shift).is_some(), "{name}");
            // normals stay primitive integer vectors
            for f in image.facets() {
                assert!(f.normal.iter().all(|x| x.is_integer()));
                assert_eq!(f.normal.primitive(), f.normal);
            }
        }
    }
}

#[test]
fn halfspace_round_trip() {
    for name in SOLIDS {
        let p = solid(name);
        let hs: Vec<(RatVector, Rational)> = p
            .facets()
            .iter()
            .map(|f| (f.normal.scale(&q(3, 1)), f.offset.clone() * q(3, 1)))
            .collect();
        let back = RatPolytope::from_halfspaces(hs).unwrap();
        assert_eq!(back.vertices(), p.vertices(), "{name}");
        assert_eq!(back.facets(), p.facets(), "{name}");
    }
}

#[test]
fn redundant_halfspaces_are_dropped() {
    let mut hs = cube_halfspaces();
    hs.push((RatVector::from_i64(&[1, 1, 1]), q(5, 2)));
    hs.push((RatVector::from_i64(&[2, 0, 0]), q(3, 1)));
    let p = RatPolytope::from_halfspaces(hs).unwrap();
    assert_eq!(p.facets().len(), 6);
}

#[test]
fn bad_inputs() {
    let open: Vec<(RatVector, Rational)> = cube_halfspaces().into_iter().take(5).collect();
    assert!(matches!(RatPolytope::from_halfspaces(open), Err(Error::Unbounded)));

    let mut slab = cube_halfspaces();
    slab[0].1 = q(-1, 2);
    assert!(matches!(RatPolytope::from_halfspaces(slab), Err(Error::NotFullDimensional { .. })));

    let mut empty = cube_halfspaces();
    empty[0].1 = q(-1, 1);
    assert!(matches!(RatPolytope::from_halfspaces(empty), Err(Error::Empty)));

    let flat = (0..4).map(|m: i64| RatVector::from_i64(&[m & 1, m >> 1, 0])).collect();
    assert!(matches!(RatPolytope::from_vertices(flat), Err(Error::NotFullDimensional { dim: 3, found: 2 })));
}

#[test]
fn json_round_trip_and_off() {
    for name in SOLIDS {
        let p = solid(name);
        let back: RatPolytope = polytope_from_json(&polytope_to_json(&p)).unwrap();
        assert_eq!(back.vertices(), p.vertices());
        let off = to_off(&p).unwrap();
        let f = p.face_lattice().f_vector();
        assert!(off.contains(&format!("{} {} {}", f[0], f[2], f[1])), "{name}");
    }
    let facets = r#"{"dim": 2, "facets": [
        {"normal": ["1", "0"], "offset": "1/2"}, {"normal": [-1, 0], "offset": "1/2"},
        {"normal": ["0", "1"], "offset": "1/2"}, {"normal": ["0", "-1"], "offset": "1/2"}]}"#;
    let sq: RatPolytope = polytope_from_json(facets).unwrap();
    assert_eq!(sq.vertices().len(), 4);
    let bad = r#"{"dim": 2, "vertices": [["0", "0"], ["1", "x"]]}"#;
    match polytope_from_json::<Rational>(bad) {
        Err(Error::Parse { path, .. }) => assert_eq!(path, "vertices[1][1]"),
        other => panic!("expected a parse error, got {other:?}"),
    }
}
