//! Evidence for `Dim M(E,I) = ω(E,I)`, the cohomological dimension of the
//! factorization category of a trace monoid.
//!
//! Lower bound: a maximum clique spans a cube `Θ^ω` that sits in the
//! factorization category as a closed subcategory, and
//! `lim^ω_{Θ^ω} ΔZ ≅ Z ≠ 0`.
//!
//! Upper bound: the clique subcategories include into the factorization
//! category with acyclic fibers (checked over every trace up to a length
//! bound), and each cube is retraction-free with chains of at most `ω`
//! nonidentity arrows, so its derived limits vanish above `ω`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fincat::{
    cube_fiber, theta_power, truncated_factorization_category, union_fiber, ChainBound, FinCat,
    Functor,
};
use crate::graph::{clique_number, maximal_cliques, IndependenceGraph};
use crate::homology::{is_acyclic, FGAbGroup};
use crate::limcoh::{constant_diagram, lim_n};
use crate::limits::Limits;
use crate::trace::{enumerate_traces, Trace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    /// `lim^ω_{Θ^ω} ΔZ`.
    pub top_lim: FGAbGroup,
    /// Whether the cube on a maximum clique is closed in the factorization
    /// category truncated at length `ω`.
    pub cube_closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberSummary {
    pub traces: usize,
    pub acyclic: usize,
    /// First trace whose fiber is not acyclic, if any.
    pub counterexample: Option<String>,
}

impl FiberSummary {
    pub fn all_acyclic(&self) -> bool {
        self.acyclic == self.traces
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBound {
    pub max_trace_len: usize,
    pub k_max: usize,
    /// Fibers of `⋃_v F M(E_v) ⊆ F M(E,I)`.
    pub union_fibers: FiberSummary,
    /// Fibers of the clique cubes `⋃_v Θ^{E_v} ⊆ F M(E,I)`.
    pub cube_fibers: FiberSummary,
    pub cube_retraction_free: bool,
    /// Longest chain of nonidentity arrows in `Θ^ω`.
    pub cube_chain: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub omega: usize,
    pub maximal_cliques: Vec<Vec<String>>,
    pub lower: LowerBound,
    pub upper: UpperBound,
    /// `ω` when every check passed.
    pub dim: Option<usize>,
}

fn summarize(
    graph: &Arc<IndependenceGraph>,
    traces: &[Trace],
    k_max: usize,
    limits: &Limits,
    build: impl Fn(&Arc<IndependenceGraph>, &Trace, &Limits) -> Result<crate::fincat::TraceFiber>,
) -> Result<FiberSummary> {
    let mut acyclic = 0;
    let mut counterexample = None;
    for mu in traces {
        let fiber = build(graph, mu, limits)?;
        if is_acyclic(&fiber.category, k_max, limits)?.acyclic {
            acyclic += 1;
        } else if counterexample.is_none() {
            counterexample = Some(mu.to_string());
        }
    }
    Ok(FiberSummary {
        traces: traces.len(),
        acyclic,
        counterexample,
    })
}

/// Checks both bounds, with fibers over every trace of length at most
/// `max_trace_len` tested for acyclicity through degree `k_max`.
pub fn dimension_report(
    graph: &Arc<IndependenceGraph>,
    max_trace_len: usize,
    k_max: usize,
    limits: &Limits,
) -> Result<DimensionReport> {
    let omega = clique_number(graph);
    let maximal = maximal_cliques(graph);

    let cube = Arc::new(theta_power(omega)?);
    let top_lim = lim_n(&constant_diagram(&cube, &FGAbGroup::free(1)), omega, limits)?;
    let cube_closed = if omega == 0 {
        true
    } else {
        let (fact, objects) = truncated_factorization_category(graph, omega, limits)?;
        let top = maximal
            .masks()
            .into_iter()
            .max_by_key(|m| m.count_ones())
            .expect("a clique of size omega");
        let members: Vec<usize> = objects
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_clique_step() && t.support() & !top == 0)
            .map(|(i, _)| i)
            .collect();
        closed_in(&fact, &members)?
    };

    let mut traces = Vec::new();
    for len in 0..=max_trace_len {
        traces.extend(enumerate_traces(graph, len, limits.enumeration)?);
    }
    let union_fibers = summarize(graph, &traces, k_max, limits, union_fiber)?;
    let cube_fibers = summarize(graph, &traces, k_max, limits, cube_fiber)?;
    let cube_chain = match cube.max_nonidentity_chain(omega + 1) {
        ChainBound::Exact(m) => m,
        ChainBound::AtLeast(m) => m,
    };
    let upper = UpperBound {
        max_trace_len,
        k_max,
        union_fibers,
        cube_fibers,
        cube_retraction_free: !cube.has_nonidentity_retraction(),
        cube_chain,
    };
    let lower = LowerBound {
        top_lim,
        cube_closed,
    };
    let consistent = !lower.top_lim.is_zero()
        && lower.cube_closed
        && upper.union_fibers.all_acyclic()
        && upper.cube_fibers.all_acyclic()
        && upper.cube_retraction_free
        && upper.cube_chain == omega;
    Ok(DimensionReport {
        omega,
        maximal_cliques: maximal.named(graph),
        lower,
        upper,
        dim: consistent.then_some(omega),
    })
}

fn closed_in(cat: &FinCat, members: &[usize]) -> Result<bool> {
    let (sub, obj_map, mor_map) = cat.full_subcategory(members)?;
    Functor::inclusion(&sub, cat, obj_map, mor_map)?.is_closed_subcategory()
}
