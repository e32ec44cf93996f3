//! Machine-readable reports.
//!
//! Every rational is written as a `"p/q"` (or `"p"`) string, every map is
//! ordered, and wall-clock timings are only included on request, so the same
//! input always yields the same bytes.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::exact::{Matrix, Scalar, Vector};
use crate::parallelohedron::{Parallelohedron, VenkovWitness};
use crate::polytope::Polytope;
use crate::scaling::{
    canonical_scaling, voronoi_form, CertificateVerdict, RidgeGraph, ScalingOutcome, ScalingWitness,
    VoronoiCertificate,
};
use crate::topology::{delta_complex, half_belt_span_d3, pi_complex, TopologyReport};
use crate::{Error, Result};

/// Process exit codes of the verification pipeline.
pub mod exit {
    pub const CERTIFIED: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const SCALING_FAILS: i32 = 2;
    pub const NOT_PARALLELOHEDRON: i32 = 3;
    pub const DV_MISMATCH: i32 = 4;
    pub const FORM_NOT_PD: i32 = 5;
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub input: String,
    pub dim: usize,
    pub f_vector: Vec<usize>,
    pub venkov: VenkovSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<Analysis>,
    /// Computed values that disagree with a published value for this input.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub discrepancies: Vec<Discrepancy>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<&'static str, u128>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VenkovSection {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<VenkovWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub belts: Vec<BeltRow>,
    pub primitivity: Vec<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual3_census: Option<DualCensus>,
    pub ridge_graph: RidgeGraphSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scaling: Option<ScalingSection>,
    pub certificate: CertificateSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub topology: Option<TopologySection>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BeltRow {
    pub length: usize,
    pub facets: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualCensus {
    pub types: BTreeMap<String, usize>,
    /// Codim-3 faces whose dual cell matched none of Delone's five types.
    pub anomalies: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RidgeGraphSummary {
    pub nodes: usize,
    pub edges: usize,
    pub components: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScalingSection {
    pub facets: Vec<FacetValue>,
    pub bases: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FacetValue {
    pub facet: usize,
    pub normal: Vec<String>,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateSection {
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessSection>,
    /// Basis of the solution space when no positive-definite member was found.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form_basis: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessSection {
    pub kind: crate::scaling::ScalingWitnessKind,
    pub facets: Vec<usize>,
    pub ridges: Vec<usize>,
    pub gain: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TopologySection {
    pub delta: TopologyReport,
    pub pi: TopologyReport,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    pub quantity: &'static str,
    pub computed: serde_json::Value,
    pub published: serde_json::Value,
    pub note: &'static str,
}

impl VerificationReport {
    pub fn exit_code(&self) -> i32 {
        let Some(a) = &self.analysis else {
            return exit::NOT_PARALLELOHEDRON;
        };
        match a.certificate.verdict {
            "certified" => exit::CERTIFIED,
            "scaling-fails" => exit::SCALING_FAILS,
            "dv-mismatch" => exit::DV_MISMATCH,
            "form-not-pd" => exit::FORM_NOT_PD,
            _ => exit::FAILURE,
        }
    }

    pub fn is_certified(&self) -> bool {
        self.exit_code() == exit::CERTIFIED
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

pub fn rat<T: Scalar>(x: &T) -> String {
    x.to_string()
}

pub fn vector_strings<T: Scalar>(v: &Vector<T>) -> Vec<String> {
    v.iter().map(rat).collect()
}

pub fn matrix_strings<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(rat).collect()).collect()
}

struct Clock {
    enabled: bool,
    start: Instant,
    laps: BTreeMap<&'static str, u128>,
}

impl Clock {
    fn new(enabled: bool) -> Self {
        Clock {
            enabled,
            start: Instant::now(),
            laps: BTreeMap::new(),
        }
    }

    fn lap(&mut self, stage: &'static str) {
        if self.enabled {
            self.laps.insert(stage, self.start.elapsed().as_millis());
            self.start = Instant::now();
        }
    }

    fn finish(self) -> Option<BTreeMap<&'static str, u128>> {
        self.enabled.then_some(self.laps)
    }
}

/// Run the whole pipeline on `p`. `entry` supplies published values to
/// compare against; `timing` adds per-stage wall-clock times.
pub fn verify<T: Scalar>(
    input: &str,
    p: &Polytope<T>,
    entry: Option<&CatalogEntry<T>>,
    timing: bool,
) -> Result<VerificationReport> {
    let mut clock = Clock::new(timing);
    let d = p.dim();
    let f_vector = p.face_lattice().f_vector()[..d].to_vec();
    let par = match Parallelohedron::new(p) {
        Ok(par) => par,
        Err(Error::NotParallelohedron(w)) => {
            clock.lap("venkov");
            return Ok(VerificationReport {
                input: input.to_string(),
                dim: d,
                f_vector,
                venkov: VenkovSection {
                    pass: false,
                    witness: Some(w),
                },
                analysis: None,
                discrepancies: Vec::new(),
                timing_ms: clock.finish(),
            });
        }
        Err(e) => return Err(e),
    };
    clock.lap("venkov");

    let belts = par
        .belts()
        .iter()
        .map(|b| BeltRow {
            length: b.len(),
            facets: b.facets.clone(),
        })
        .collect();
    let primitivity = par.primitivity_profile()?;
    let dual3_census = if d >= 3 {
        let (types, anomalies) = par.dual3_census()?;
        Some(DualCensus {
            types: types.into_iter().map(|(t, n)| (t.name().to_string(), n)).collect(),
            anomalies: anomalies.into_iter().map(|(f, _)| f).collect(),
        })
    } else {
        None
    };
    clock.lap("dual-cells");

    let graph = RidgeGraph::build(&par)?;
    let ridge_graph = RidgeGraphSummary {
        nodes: graph.node_count(),
        edges: graph.edges().len(),
        components: graph.component_count(),
    };
    let (scaling, certificate) = match canonical_scaling(&par, &graph)? {
        ScalingOutcome::Violation(w) => (None, witness_section(&w)),
        ScalingOutcome::Scaling(s) => {
            let cert = voronoi_form(&par, &graph, &s)?;
            let section = ScalingSection {
                facets: s
                    .values
                    .iter()
                    .enumerate()
                    .map(|(i, v)| FacetValue {
                        facet: i,
                        normal: vector_strings(&par.polytope().facet(i).normal),
                        value: rat(v),
                    })
                    .collect(),
                bases: s.bases.clone(),
            };
            (Some(section), certificate_section(&cert))
        }
    };
    clock.lap("certificate");

    let topology = if d == 3 {
        let delta = delta_complex(&par)?.report();
        let mut pi = pi_complex(&par)?.report();
        pi.half_belt_span = Some(half_belt_span_d3(&par)?);
        Some(TopologySection { delta, pi })
    } else {
        None
    };
    clock.lap("topology");

    let discrepancies = match (entry, &topology) {
        (Some(e), Some(t)) => discrepancies(e, &t.pi),
        _ => Vec::new(),
    };

    Ok(VerificationReport {
        input: input.to_string(),
        dim: d,
        f_vector,
        venkov: VenkovSection {
            pass: true,
            witness: None,
        },
        analysis: Some(Analysis {
            belts,
            primitivity,
            dual3_census,
            ridge_graph,
            scaling,
            certificate,
            topology,
        }),
        discrepancies,
        timing_ms: clock.finish(),
    })
}

fn witness_section<T: Scalar>(w: &ScalingWitness<T>) -> CertificateSection {
    CertificateSection {
        verdict: "scaling-fails",
        gram: None,
        witness: Some(WitnessSection {
            kind: w.kind.clone(),
            facets: w.walk.facets.clone(),
            ridges: w.walk.ridges.clone(),
            gain: rat(&w.gain),
        }),
        form_basis: None,
    }
}

fn certificate_section<T: Scalar>(c: &VoronoiCertificate<T>) -> CertificateSection {
    let gram = c.gram.as_ref().map(matrix_strings);
    match &c.verdict {
        CertificateVerdict::Certified => CertificateSection {
            verdict: "certified",
            gram,
            witness: None,
            form_basis: None,
        },
        CertificateVerdict::DvMismatch => CertificateSection {
            verdict: "dv-mismatch",
            gram,
            witness: None,
            form_basis: None,
        },
        CertificateVerdict::FormNotPd { basis } => CertificateSection {
            verdict: "form-not-pd",
            gram: None,
            witness: None,
            form_basis: Some(basis.iter().map(matrix_strings).collect()),
        },
        CertificateVerdict::ScalingFails(w) => witness_section(w),
    }
}

/// Compare computed π-surface values with the published ones recorded in the
/// catalog entry.
pub fn discrepancies<T: Scalar>(entry: &CatalogEntry<T>, pi: &TopologyReport) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    if let Some(g) = entry.golden("pi_h1_rank_published") {
        let computed: usize = pi.components.iter().map(|c| c.h1_rank).sum();
        let computed = serde_json::json!(computed);
        if computed != g.value {
            out.push(Discrepancy {
                quantity: "pi_h1_rank",
                computed,
                published: g.value.clone(),
                note: "the computed rank is the rational first Betti number of the open surface; \
                       an open surface has free first homology, so no torsion part is reported",
            });
        }
    }
    out
}
