//! The `tracehom` command-line driver.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::dimension::dimension_report;
use crate::error::Result;
use crate::fincat::{builtin, cube_fiber, union_fiber, CategoryDocument, FinCat, TraceFiber};
use crate::graph::{clique_number, maximal_cliques, IndependenceGraph};
use crate::homology::{is_acyclic, nerve_homology, AcyclicityCertificate};
use crate::limcoh::random::random_diagram;
use crate::limcoh::{cochain_complex, normalization_agreement, AbDiagram, DiagramDocument};
use crate::limits::Limits;
use crate::syzygy::{global_dimension_report, FieldSpec};
use crate::trace::Trace;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "tracehom",
    version,
    about = "Trace monoids, nerve homology and derived limits"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Cap on enumerated words, morphisms and simplices.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Clique number and maximal cliques of an independence graph.
    Omega {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Integral homology of the nerve of a category.
    Homology {
        /// JSON category file, or `point`, `theta`, `theta^n`.
        #[arg(long)]
        category: String,
        #[arg(long, default_value_t = 2)]
        kmax: usize,
    },
    /// Derived limits of a diagram of abelian groups.
    Lim {
        /// JSON diagram file, or `random`.
        #[arg(long)]
        diagram: String,
        /// Base category for `--diagram random`.
        #[arg(long, default_value = "theta")]
        category: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        kmax: usize,
    },
    /// Fibers of the clique subcategories over a trace.
    Fiber {
        #[arg(long)]
        graph: PathBuf,
        /// Letters of the trace; empty for the identity.
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
    },
    /// Clique resolution, Ext dimensions and global dimension over a field.
    Gld {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "q0")]
        field: FieldSpec,
        #[arg(long, default_value_t = 6)]
        mmax: usize,
    },
    /// Both bounds of the dimension of the factorization category.
    Dim {
        #[arg(long)]
        graph: PathBuf,
        /// Fibers are checked over traces up to this length.
        #[arg(long, default_value_t = 3)]
        mmax: usize,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
    },
}

impl Common {
    fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(b) = self.budget {
            limits.enumeration = b;
            limits.max_morphisms = usize::try_from(b).unwrap_or(usize::MAX);
            limits.max_simplices = usize::try_from(b).unwrap_or(usize::MAX);
        }
        limits
    }
}

/// A command's result, rendered as text or JSON.
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                serde_json::to_string_pretty(&self.json).expect("reports serialize") + "\n"
            }
        }
    }
}

fn load_category(spec: &str, limits: &Limits) -> Result<FinCat> {
    let path = Path::new(spec);
    if path.is_file() {
        let doc: CategoryDocument = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        doc.to_category(limits)
    } else {
        builtin(spec)
    }
}

pub fn cmd_omega(graph: &IndependenceGraph) -> Report {
    let omega = clique_number(graph);
    let cliques = maximal_cliques(graph).named(graph);
    let shown: Vec<String> = cliques
        .iter()
        .map(|c| format!("{{{}}}", c.join(",")))
        .collect();
    Report {
        text: format!("omega = {omega}\nmaximal cliques: {}\n", shown.join(" ")),
        json: json!({ "omega": omega, "maximal_cliques": cliques }),
    }
}

pub fn cmd_homology(cat: &FinCat, k_max: usize, limits: &Limits) -> Result<Report> {
    let h = nerve_homology(cat, k_max, limits)?;
    let groups: Vec<_> = (0..=k_max).map(|n| h.group(n)).collect::<Result<_>>()?;
    let mut text = format!(
        "{} objects, {} morphisms\n",
        cat.object_count(),
        cat.morphism_count()
    );
    for (n, g) in groups.iter().enumerate() {
        text.push_str(&format!("H_{n} = {g}\n"));
    }
    text.push_str(&format!(
        "ranks: {:?}\n",
        groups.iter().map(|g| g.rank()).collect::<Vec<_>>()
    ));
    Ok(Report {
        text,
        json: json!({
            "objects": cat.object_count(),
            "morphisms": cat.morphism_count(),
            "k_max": k_max,
            "groups": groups,
            "ranks": groups.iter().map(|g| g.rank()).collect::<Vec<_>>(),
            "exhaustive": h.exhaustive,
        }),
    })
}

pub fn cmd_lim(f: &AbDiagram, n_max: usize, limits: &Limits) -> Result<Report> {
    let base = f.base();
    let normalized = !base.has_nonidentity_retraction();
    let (full, norm) = if normalized {
        let r = normalization_agreement(f, n_max, limits)?;
        (r.full, Some(r.normalized))
    } else {
        (cochain_complex(f, n_max, false, limits)?.lims()?, None)
    };
    let mut text = format!(
        "{} objects, {} morphisms\n",
        base.object_count(),
        base.morphism_count()
    );
    for (n, g) in full.iter().enumerate() {
        text.push_str(&format!("lim^{n} = {g}\n"));
    }
    text.push_str(if normalized {
        "normalized complex agrees\n"
    } else {
        "category has a nonidentity retraction; full complex only\n"
    });
    Ok(Report {
        text,
        json: json!({ "n_max": n_max, "full": full, "normalized": norm }),
    })
}

#[derive(Serialize)]
struct FiberJson<'a> {
    objects: usize,
    morphisms: usize,
    acyclic: bool,
    certificate: &'a AcyclicityCertificate,
}

fn fiber_json<'a>(fiber: &TraceFiber, cert: &'a AcyclicityCertificate) -> FiberJson<'a> {
    FiberJson {
        objects: fiber.category.object_count(),
        morphisms: fiber.category.morphism_count(),
        acyclic: cert.acyclic,
        certificate: cert,
    }
}

pub fn cmd_fiber(
    graph: &Arc<IndependenceGraph>,
    mu: &Trace,
    k_max: usize,
    limits: &Limits,
) -> Result<Report> {
    let union = union_fiber(graph, mu, limits)?;
    let cube = cube_fiber(graph, mu, limits)?;
    let union_cert = is_acyclic(&union.category, k_max, limits)?;
    let cube_cert = is_acyclic(&cube.category, k_max, limits)?;
    let verdict = |c: &AcyclicityCertificate| if c.acyclic { "acyclic" } else { "not acyclic" };
    let text = format!(
        "trace {mu}, checked through degree {k_max}\n\
         union of clique subcategories: {} objects, {} morphisms, {}\n\
         clique cubes: {} objects, {} morphisms, {}\n",
        union.category.object_count(),
        union.category.morphism_count(),
        verdict(&union_cert),
        cube.category.object_count(),
        cube.category.morphism_count(),
        verdict(&cube_cert),
    );
    Ok(Report {
        text,
        json: json!({
            "trace": mu.to_json(),
            "k_max": k_max,
            "union": fiber_json(&union, &union_cert),
            "cube": fiber_json(&cube, &cube_cert),
        }),
    })
}

pub fn cmd_gld(
    graph: &Arc<IndependenceGraph>,
    field: FieldSpec,
    m_max: usize,
    limits: &Limits,
) -> Result<Report> {
    let r = global_dimension_report(graph, field, m_max, limits)?;
    let text = format!(
        "field {}\nomega = {}\next dimensions: {:?}\nexact through internal degree {}\n{}gld = {}\n",
        r.field,
        r.omega,
        r.ext_dims,
        r.exactness.m_max,
        r.table(),
        r.gld
    );
    Ok(Report {
        text,
        json: serde_json::to_value(&r)?,
    })
}

pub fn cmd_dim(
    graph: &Arc<IndependenceGraph>,
    max_len: usize,
    k_max: usize,
    limits: &Limits,
) -> Result<Report> {
    let r = dimension_report(graph, max_len, k_max, limits)?;
    let fibers = |s: &crate::dimension::FiberSummary| format!("{}/{} acyclic", s.acyclic, s.traces);
    let text = format!(
        "omega = {}\n\
         lower bound: lim^{} of the constant Z on the cube = {}, cube closed: {}\n\
         upper bound (traces up to length {}, degrees through {}):\n  union fibers {}\n  cube fibers {}\n  \
         cube retraction-free: {}, longest chain: {}\n\
         dim = {}\n",
        r.omega,
        r.omega,
        r.lower.top_lim,
        r.lower.cube_closed,
        r.upper.max_trace_len,
        r.upper.k_max,
        fibers(&r.upper.union_fibers),
        fibers(&r.upper.cube_fibers),
        r.upper.cube_retraction_free,
        r.upper.cube_chain,
        r.dim.map_or("undetermined".to_string(), |d| d.to_string()),
    );
    Ok(Report {
        text,
        json: serde_json::to_value(&r)?,
    })
}

/// Runs a parsed command.
pub fn run(config: &RunConfig) -> Result<Report> {
    let limits = config.common.limits();
    match &config.command {
        Command::Omega { graph } => Ok(cmd_omega(&IndependenceGraph::load(graph)?)),
        Command::Homology { category, kmax } => {
            cmd_homology(&load_category(category, &limits)?, *kmax, &limits)
        }
        Command::Lim {
            diagram,
            category,
            seed,
            kmax,
        } => {
            let f = if diagram == "random" {
                let base = Arc::new(load_category(category, &limits)?);
                random_diagram(&base, &mut ChaCha8Rng::seed_from_u64(*seed))?
            } else {
                DiagramDocument::load(diagram)?.to_diagram(&limits)?
            };
            cmd_lim(&f, *kmax, &limits)
        }
        Command::Fiber { graph, word, kmax } => {
            let graph = Arc::new(IndependenceGraph::load(graph)?);
            let mu = Trace::parse(&graph, word)?;
            cmd_fiber(&graph, &mu, *kmax, &limits)
        }
        Command::Gld { graph, field, mmax } => cmd_gld(
            &Arc::new(IndependenceGraph::load(graph)?),
            *field,
            *mmax,
            &limits,
        ),
        Command::Dim { graph, mmax, kmax } => cmd_dim(
            &Arc::new(IndependenceGraph::load(graph)?),
            *mmax,
            *kmax,
            &limits,
        ),
    }
}

/// Parses the process arguments, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&config) {
        Ok(report) => {
            print!("{}", report.render(config.common.format));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
