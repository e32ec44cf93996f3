use parallo::catalog::{catalog, Provenance, SOLIDS};
use parallo::topology::{delta_complex, half_belt_span_d3, pi_complex, ridge_connectivity, TopologyReport};
use parallo::{Error, Parallelohedron, Rational};
use serde_json::{json, Value};

fn solid(name: &str) -> Parallelohedron {
    let p = catalog::<Rational>(name).unwrap().polytope().unwrap();
    Parallelohedron::new(&p).unwrap()
}

fn reports(name: &str) -> (TopologyReport, TopologyReport) {
    let p = solid(name);
    (delta_complex(&p).unwrap().report(), pi_complex(&p).unwrap().report())
}

/// The value a topology golden describes, read off the computed reports.
fn computed(key: &str, delta: &TopologyReport, pi: &TopologyReport) -> Option<Value> {
    let (surface, field) = key.split_once('_')?;
    let r = match surface {
        "delta" => delta,
        "pi" => pi,
        _ => return None,
    };
    let mut by_rank: Vec<_> = r.components.iter().collect();
    by_rank.sort_by_key(|c| (c.h1_rank, c.chi));
    Some(match field {
        "components" => json!(r.component_count()),
        "cells" => json!(r.cell_counts()),
        "chi" => json!(r.chis()),
        "h1_ranks" => json!(r.h1_ranks()),
        "compact" => json!(by_rank.iter().map(|c| c.compact).collect::<Vec<_>>()),
        "orientable" => json!(by_rank.iter().map(|c| c.orientable).collect::<Vec<_>>()),
        _ => return None,
    })
}

#[test]
fn catalog_topology_goldens() {
    let mut checked = 0;
    for name in SOLIDS {
        let (delta, pi) = reports(name);
        for g in &catalog::<Rational>(name).unwrap().golden {
            // published values are compared, not enforced; see the discrepancy report
            if g.key.ends_with("_published") {
                continue;
            }
            if let Some(value) = computed(g.key, &delta, &pi) {
                assert_eq!(value, g.value, "{name} {}", g.key);
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 34, "topology goldens checked");
}

#[test]
fn published_pi_rank_of_the_elongated_dodecahedron_is_flagged() {
    let entry = catalog::<Rational>("elongated-dodecahedron").unwrap();
    let g = entry.golden("pi_h1_rank_published").unwrap();
    assert_eq!(g.provenance, Provenance::Published);
    let (_, pi) = reports("elongated-dodecahedron");
    let found = parallo::report::discrepancies(&entry, &pi);
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].computed, json!(2));
    assert_eq!(found[0].published, json!(1));
    for name in SOLIDS.iter().filter(|n| **n != "elongated-dodecahedron") {
        let (_, pi) = reports(name);
        assert!(parallo::report::discrepancies(&catalog::<Rational>(name).unwrap(), &pi).is_empty());
    }
}

#[test]
fn pi_halves_the_euler_characteristic() {
    for name in SOLIDS {
        let p = solid(name);
        let (d, q) = (delta_complex(&p).unwrap(), pi_complex(&p).unwrap());
        assert_eq!(d.chi(), 2 * q.chi(), "{name}");
        let (dc, qc) = (d.cell_counts(), q.cell_counts());
        assert!(dc.iter().zip(&qc).all(|(a, b)| *a == 2 * b), "{name}");
        // the surface keeps every facet
        assert_eq!(dc[2], p.polytope().facets().len());
    }
}

#[test]
fn delta_components_match_ridge_connectivity() {
    for name in SOLIDS {
        let p = solid(name);
        assert_eq!(delta_complex(&p).unwrap().component_count(), ridge_connectivity(&p).unwrap(), "{name}");
    }
}

#[test]
fn betti_numbers_follow_euler_characteristic() {
    for name in SOLIDS {
        let (delta, pi) = reports(name);
        for c in delta.components.iter().chain(&pi.components) {
            let h1 = c.h1_rank as i64;
            if !c.compact {
                // an open connected surface has H0 = 1 and H2 = 0
                assert_eq!(h1, 1 - c.chi, "{name}");
            } else if c.orientable {
                assert_eq!(h1, 2 - c.chi, "{name}");
            } else {
                assert_eq!(h1, 1 - c.chi, "{name}");
            }
        }
        // δ components are pieces of a sphere
        assert!(delta.components.iter().all(|c| c.orientable));
    }
}

#[test]
fn half_belt_cycles() {
    for name in SOLIDS {
        let p = solid(name);
        let span = half_belt_span_d3(&p).unwrap();
        let six = p.belts().iter().filter(|b| b.is_primitive()).count();
        assert_eq!(span.cycles, 6 * six, "{name}");
        assert!(span.span_rank <= span.h1_rank);
        let (_, pi) = reports(name);
        assert_eq!(span.h1_rank, pi.components.iter().map(|c| c.h1_rank).sum::<usize>());
        assert!(span.spanned, "{name}");
    }
}

#[test]
fn surfaces_need_three_dimensions() {
    let d4 = catalog::<Rational>("lattice-D4").unwrap().polytope().unwrap();
    let p = Parallelohedron::new(&d4).unwrap();
    assert!(matches!(delta_complex(&p), Err(Error::UnsupportedDimension { .. })));
    assert!(matches!(pi_complex(&p), Err(Error::UnsupportedDimension { .. })));
    assert_eq!(ridge_connectivity(&p).unwrap(), 1);
}
