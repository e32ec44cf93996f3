//! JSON documents and OFF export.
//!
//! Rationals are written as `"p/q"` (or `"p"`) strings. Integer JSON numbers
//! are accepted on input as a convenience.

use serde::{Deserialize, Serialize};

use super::{Facet, Polytope};
use crate::exact::{has_terminating_decimal, parse_scalar, to_decimal, Matrix, Scalar, Vector};
use crate::{Error, Result};

/// A rational as it appears in a document.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum RatText {
    Text(String),
    Int(i64),
}

impl RatText {
    pub fn from_scalar<T: Scalar>(x: &T) -> Self {
        RatText::Text(x.to_string())
    }

    pub fn parse<T: Scalar>(&self, path: &str) -> Result<T> {
        match self {
            RatText::Int(n) => Ok(T::from_i64(*n)),
            RatText::Text(s) => parse_scalar(s)
                .ok_or_else(|| Error::parse(path, format!("invalid rational '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FacetDoc {
    pub normal: Vec<RatText>,
    pub offset: RatText,
}

/// `{"dim": d, "vertices": [...]}` and/or `{"dim": d, "facets": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<RatText>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<FacetDoc>>,
}

pub(crate) fn parse_vector<T: Scalar>(row: &[RatText], dim: usize, path: &str) -> Result<Vector<T>> {
    if row.len() != dim {
        return Err(Error::parse(
            path,
            format!("expected {dim} coordinates, found {}", row.len()),
        ));
    }
    row.iter()
        .enumerate()
        .map(|(j, x)| x.parse(&format!("{path}[{j}]")))
        .collect::<Result<Vec<T>>>()
        .map(Vector)
}

pub(crate) fn parse_matrix<T: Scalar>(rows: &[Vec<RatText>], path: &str) -> Result<Matrix<T>> {
    let cols = rows.first().map_or(0, Vec::len);
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, r)| parse_vector(r, cols, &format!("{path}[{i}]")).map(|v| v.0))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(&parsed)
}

pub(crate) fn vector_text<T: Scalar>(v: &Vector<T>) -> Vec<RatText> {
    v.iter().map(RatText::from_scalar).collect()
}

impl PolytopeDoc {
    pub fn from_polytope<T: Scalar>(p: &Polytope<T>) -> Self {
        PolytopeDoc {
            dim: p.dim(),
            vertices: Some(p.vertices().iter().map(vector_text).collect()),
            facets: Some(
                p.facets()
                    .iter()
                    .map(|f| FacetDoc {
                        normal: vector_text(&f.normal),
                        offset: RatText::from_scalar(&f.offset),
                    })
                    .collect(),
            ),
        }
    }

    /// Build the polytope. When both descriptions are present the vertices win
    /// and the facets must agree with them.
    pub fn to_polytope<T: Scalar>(&self) -> Result<Polytope<T>> {
        let dim = self.dim;
        let facets = self
            .facets
            .as_ref()
            .map(|fs| {
                fs.iter()
                    .enumerate()
                    .map(|(i, f)| {
                        let n = parse_vector(&f.normal, dim, &format!("facets[{i}].normal"))?;
                        let b = f.offset.parse(&format!("facets[{i}].offset"))?;
                        Ok((n, b))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        match (&self.vertices, facets) {
            (Some(vs), facets) => {
                let pts = vs
                    .iter()
                    .enumerate()
                    .map(|(i, v)| parse_vector(v, dim, &format!("vertices[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                let p = Polytope::from_vertices(pts)?;
                if let Some(hs) = facets {
                    let from_h = Polytope::from_halfspaces(hs)?;
                    if from_h.facets() != p.facets() {
                        return Err(Error::parse("facets", "facets disagree with the vertices"));
                    }
                }
                Ok(p)
            }
            (None, Some(hs)) => Polytope::from_halfspaces(hs),
            (None, None) => Err(Error::parse("$", "expected \"vertices\" or \"facets\"")),
        }
    }
}

pub fn polytope_from_json<T: Scalar>(text: &str) -> Result<Polytope<T>> {
    let doc: PolytopeDoc = serde_json::from_str(text)?;
    doc.to_polytope()
}

pub fn polytope_to_json<T: Scalar>(p: &Polytope<T>) -> String {
    serde_json::to_string_pretty(&PolytopeDoc::from_polytope(p)).expect("serializable")
}

/// Cyclically ordered vertex indices of a 2-face of a 3-polytope, counter-clockwise
/// when seen from outside along `outward`.
fn polygon_cycle<T: Scalar>(p: &Polytope<T>, face: usize, outward: &Vector<T>) -> Vec<usize> {
    let lattice = p.face_lattice();
    let edges: Vec<[usize; 2]> = lattice
        .covers(face)
        .iter()
        .map(|&e| {
            let vs = &lattice.face(e).vertices;
            [vs[0], vs[1]]
        })
        .collect();
    let start = edges[0][0];
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = edges
            .iter()
            .find_map(|e| {
                if e[0] == cur && e[1] != prev {
                    Some(e[1])
                } else if e[1] == cur && e[0] != prev {
                    Some(e[0])
                } else {
                    None
                }
            })
            .expect("polygon boundary is a cycle");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    let (a, b, c) = (
        p.vertex(cycle[0]),
        p.vertex(cycle[1]),
        p.vertex(cycle[2]),
    );
    let u = b - a;
    let w = c - a;
    let cross = Vector(vec![
        u[1].clone() * w[2].clone() - u[2].clone() * w[1].clone(),
        u[2].clone() * w[0].clone() - u[0].clone() * w[2].clone(),
        u[0].clone() * w[1].clone() - u[1].clone() * w[0].clone(),
    ]);
    if cross.dot(outward).is_negative() {
        cycle[1..].reverse();
    }
    cycle
}

/// Render a 3-polytope as an OFF mesh. Coordinates are exact decimals when
/// possible; otherwise a `# exact` comment carries the rational value.
pub fn to_off<T: Scalar>(p: &Polytope<T>) -> Result<String> {
    if p.dim() != 3 {
        return Err(Error::UnsupportedDimension {
            dim: p.dim(),
            reason: "OFF export needs a 3-polytope",
        });
    }
    let f = p.face_lattice().f_vector();
    let mut out = String::from("OFF\n# visualization only: decimal coordinates may be rounded\n");
    out.push_str(&format!("{} {} {}\n", f[0], f[2], f[1]));
    for (i, v) in p.vertices().iter().enumerate() {
        let rendered: Vec<(String, bool)> = v
            .iter()
            .map(|x| {
                if has_terminating_decimal(x) {
                    to_decimal(x, usize::MAX)
                } else {
                    to_decimal(x, 12)
                }
            })
            .collect();
        if rendered.iter().any(|(_, exact)| !exact) {
            out.push_str(&format!("#exact {i}: {}\n", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")));
        }
        out.push_str(
            &rendered
                .into_iter()
                .map(|(s, _)| s)
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push('\n');
    }
    for (fi, Facet { normal, .. }) in p.facets().iter().enumerate() {
        let face = p.face_lattice().facet_face(fi);
        let cycle = polygon_cycle(p, face, normal);
        out.push_str(&cycle.len().to_string());
        for v in cycle {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    Ok(out)
}
