use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use parallo::catalog::{catalog, CatalogEntry, Source, NAMES};
use parallo::lattice::{lattice_from_json, LatticeDoc};
use parallo::polytope::io::{polytope_from_json, polytope_to_json, to_off, PolytopeDoc};
use parallo::report::{exit, vector_strings, verify};
use parallo::topology::{delta_complex, half_belt_span_d3, pi_complex};
use parallo::{Error, Parallelohedron, RatLattice, RatPolytope};

/// Exact analysis of parallelohedra and their Voronoi certificates.
#[derive(Parser)]
#[command(name = "parallo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Built-in reference inputs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check Venkov's conditions on a polytope file.
    Check { file: PathBuf },
    /// Run the full certification pipeline.
    Verify {
        /// Polytope or lattice JSON file, or a catalog name.
        input: String,
        /// Include per-stage wall-clock times (makes the output non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Topology of the δ-surface, or of the π-surface with `--pi`.
    Surface {
        input: String,
        #[arg(long)]
        pi: bool,
    },
    /// Dual cells of all faces of a given codimension.
    DualCells {
        input: String,
        #[arg(long)]
        codim: usize,
    },
    /// Dirichlet–Voronoi cell of a lattice.
    VoronoiCell { input: String },
    /// Write the polytope as JSON or as an OFF mesh.
    Export {
        input: String,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Off,
    Json,
}

enum Input {
    Entry(CatalogEntry),
    Polytope(RatPolytope),
    Lattice(RatLattice),
}

impl Input {
    fn load(arg: &str) -> anyhow::Result<Input> {
        if NAMES.contains(&arg) {
            return Ok(Input::Entry(catalog(arg)?));
        }
        let text = fs::read_to_string(arg).with_context(|| format!("cannot read '{arg}'"))?;
        let doc: Value = serde_json::from_str(&text).map_err(Error::from)?;
        if doc.get("basis").is_some() {
            Ok(Input::Lattice(lattice_from_json(&text)?))
        } else {
            Ok(Input::Polytope(polytope_from_json(&text)?))
        }
    }

    fn polytope(&self) -> anyhow::Result<RatPolytope> {
        Ok(match self {
            Input::Entry(e) => e.polytope()?,
            Input::Polytope(p) => p.clone(),
            Input::Lattice(l) => l.dv_cell()?,
        })
    }

    fn entry(&self) -> Option<&CatalogEntry> {
        match self {
            Input::Entry(e) => Some(e),
            _ => None,
        }
    }
}

fn print(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("values serialize"));
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Catalog { action: CatalogAction::List } => {
            for name in NAMES {
                let e: CatalogEntry = catalog(name)?;
                println!("{name:24} {}", e.description);
            }
            Ok(exit::CERTIFIED)
        }
        Command::Catalog {
            action: CatalogAction::Show { name },
        } => {
            let e: CatalogEntry = catalog(&name)?;
            let source = match &e.source {
                Source::Polytope(p) => json!({ "polytope": PolytopeDoc::from_polytope(p) }),
                Source::Lattice(l) => json!({ "lattice": LatticeDoc::from_lattice(l) }),
            };
            print(&json!({
                "name": e.name,
                "description": e.description,
                "source": source,
                "golden": e.golden,
            }));
            Ok(exit::CERTIFIED)
        }
        Command::Check { file } => {
            let text = fs::read_to_string(&file).with_context(|| format!("cannot read {}", file.display()))?;
            let p: RatPolytope = polytope_from_json(&text)?;
            let witness = match Parallelohedron::new(&p) {
                Ok(_) => None,
                Err(Error::NotParallelohedron(w)) => Some(w),
                Err(e) => return Err(e.into()),
            };
            let pass = witness.is_none();
            let mut out = json!({ "dim": p.dim(), "f_vector": &p.face_lattice().f_vector()[..p.dim()], "venkov": { "pass": pass } });
            if let Some(w) = witness {
                out["venkov"]["witness"] = serde_json::to_value(&w)?;
                out["venkov"]["message"] = json!(w.to_string());
            }
            print(&out);
            Ok(if pass { exit::CERTIFIED } else { exit::NOT_PARALLELOHEDRON })
        }
        Command::Verify { input, timing } => {
            let src = Input::load(&input)?;
            let report = verify(&input, &src.polytope()?, src.entry(), timing)?;
            println!("{}", report.to_json()?);
            Ok(report.exit_code())
        }
        Command::Surface { input, pi } => {
            let src = Input::load(&input)?;
            let par = Parallelohedron::new(&src.polytope()?)?;
            let mut report = if pi { pi_complex(&par)? } else { delta_complex(&par)? }.report();
            let mut discrepancies = Vec::new();
            if pi {
                report.half_belt_span = Some(half_belt_span_d3(&par)?);
                if let Some(e) = src.entry() {
                    discrepancies = parallo::report::discrepancies(e, &report);
                }
            }
            let mut out = serde_json::to_value(&report)?;
            if !discrepancies.is_empty() {
                out["discrepancies"] = serde_json::to_value(&discrepancies)?;
            }
            print(&out);
            Ok(exit::CERTIFIED)
        }
        Command::DualCells { input, codim } => {
            let src = Input::load(&input)?;
            let par = Parallelohedron::new(&src.polytope()?)?;
            let d = par.dim();
            if codim == 0 || codim > d {
                bail!("codimension must be between 1 and {d}");
            }
            let mut cells = Vec::new();
            let mut census = std::collections::BTreeMap::<String, usize>::new();
            for &face in par.polytope().face_lattice().of_dim(d - codim) {
                let cell = par.dual_cell(face)?;
                let mut row = json!({
                    "face": face,
                    "vertices": par.polytope().face(face).vertices,
                    "centers": cell.centers.iter().map(vector_strings).collect::<Vec<_>>(),
                });
                if codim == 3 {
                    let kind = match par.classify_dual3(&cell) {
                        Ok(t) => t.name().to_string(),
                        Err(pattern) => {
                            eprintln!("warning: dual cell of face {face} matches no Delone type: {pattern:?}");
                            "unmatched".to_string()
                        }
                    };
                    *census.entry(kind.clone()).or_default() += 1;
                    row["type"] = json!(kind);
                } else {
                    *census.entry(format!("{} centers", cell.centers.len())).or_default() += 1;
                }
                cells.push(row);
            }
            print(&json!({ "codim": codim, "census": census, "cells": cells }));
            Ok(exit::CERTIFIED)
        }
        Command::VoronoiCell { input } => {
            let lattice = match Input::load(&input)? {
                Input::Lattice(l) => l,
                Input::Entry(e) => match e.lattice() {
                    Some(l) => l.clone(),
                    None => bail!("'{input}' is a polytope, not a lattice"),
                },
                Input::Polytope(_) => bail!("'{input}' is a polytope, not a lattice"),
            };
            println!("{}", polytope_to_json(&lattice.dv_cell()?));
            Ok(exit::CERTIFIED)
        }
        Command::Export { input, format, out } => {
            let p = Input::load(&input)?.polytope()?;
            let text = match format {
                Format::Json => polytope_to_json(&p),
                Format::Off => to_off(&p)?,
            };
            write(&out, &text)?;
            Ok(exit::CERTIFIED)
        }
    }
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<Error>() {
                Some(Error::NotParallelohedron(_)) => exit::NOT_PARALLELOHEDRON,
                _ => exit::FAILURE,
            };
            ExitCode::from(code as u8)
        }
    }
}
