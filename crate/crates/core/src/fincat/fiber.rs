//! Comma fibers, including the fibers of subcategory inclusions into the
//! (infinite) factorization category of a trace monoid.
//!
//! The factorization category F M(E,I) is never built in full. Its fiber over
//! a trace `mu` only involves factorizations of `mu`, so it is finite.

use std::collections::HashMap;
use std::sync::Arc;

use super::{FinCat, Functor, Morphism};
use crate::error::{Error, Result};
use crate::graph::IndependenceGraph;
use crate::limits::Limits;
use crate::trace::{enumerate_traces, factorizations3, Factorization, Trace};

/// The comma category S/d: objects `(c, α: S(c) → d)`, morphisms
/// `(f, α₁, α₂)` with `α₂∘S(f) = α₁`.
pub fn comma_fiber(functor: &Functor<'_>, d: usize) -> Result<FinCat> {
    let source = functor.source();
    let target = functor.target();
    if d >= target.object_count() {
        return Err(Error::Usage(format!(
            "object {d} is not in the target category"
        )));
    }
    let mut objects = Vec::new();
    let mut names = Vec::new();
    let mut object_index = HashMap::new();
    for c in 0..source.object_count() {
        for alpha in target.hom(functor.map_object(c), d) {
            object_index.insert((c, alpha), objects.len());
            names.push(format!(
                "({},{})",
                source.objects()[c],
                target.morphism(alpha).name
            ));
            objects.push((c, alpha));
        }
    }
    let mut morphisms = Vec::new();
    let mut triples = Vec::new();
    let mut index = HashMap::new();
    for (i, &(c1, alpha1)) in objects.iter().enumerate() {
        for &f in source.outgoing(c1) {
            let c2 = source.cod(f);
            let sf = functor.map_morphism(f);
            for alpha2 in target.hom(functor.map_object(c2), d) {
                if target.compose(alpha2, sf) == Some(alpha1) {
                    let j = object_index[&(c2, alpha2)];
                    index.insert((f, i, j), morphisms.len());
                    triples.push((f, i, j));
                    morphisms.push(Morphism {
                        name: format!("{}:{}->{}", source.morphism(f).name, names[i], names[j]),
                        dom: i,
                        cod: j,
                    });
                }
            }
        }
    }
    let identities = objects
        .iter()
        .enumerate()
        .map(|(i, &(c, _))| index[&(source.identity(c), i, i)])
        .collect();
    FinCat::from_fn(names, morphisms, identities, &Limits::default(), |g, f| {
        let (f1, i, _) = triples[f];
        let (f2, _, k) = triples[g];
        let h = source.compose(f2, f1).expect("composable in source");
        index
            .get(&(h, i, k))
            .copied()
            .ok_or_else(|| Error::Invariant("comma composite missing".into()))
    })
}

/// An object `(α, (f, g))` of a fiber over `mu`, meaning `g·α·f = mu`.
pub type FiberObject = Factorization;

/// A comma fiber over a trace, with its objects in category order.
#[derive(Clone, Debug)]
pub struct TraceFiber {
    pub base: Trace,
    pub objects: Vec<FiberObject>,
    pub category: FinCat,
}

/// Fiber over `mu` of the inclusion `⋃_v F M(E_v) ⊆ F M(E,I)`, where `v` runs
/// over the maximal cliques of the independence graph.
///
/// Objects are the factorizations `g·α·f = mu` whose middle part `α` is
/// supported inside a clique. Objects lying in several clique submonoids
/// appear once. The fiber is a poset: a morphism `(α₁,f₁,g₁) → (α₂,f₂,g₂)`
/// is the unique `(h, k)` with `f₁ = h·f₂`, `g₁ = g₂·k` and `α₂ = k·α₁·h`.
pub fn union_fiber(
    graph: &Arc<IndependenceGraph>,
    mu: &Trace,
    limits: &Limits,
) -> Result<TraceFiber> {
    trace_fiber(graph, mu, limits, |alpha| graph.is_clique(alpha.support()))
}

/// Fiber over `mu` of the inclusion of the clique cubes `⋃_v Θ^{E_v}`, the
/// full subcategory of F M(E,I) on traces that are a set of pairwise
/// commuting letters. For the one-letter free monoid this is `Θ_a/a^k`.
pub fn cube_fiber(
    graph: &Arc<IndependenceGraph>,
    mu: &Trace,
    limits: &Limits,
) -> Result<TraceFiber> {
    trace_fiber(graph, mu, limits, Trace::is_clique_step)
}

fn trace_fiber(
    graph: &Arc<IndependenceGraph>,
    mu: &Trace,
    limits: &Limits,
    admissible: impl Fn(&Trace) -> bool,
) -> Result<TraceFiber> {
    if !Arc::ptr_eq(graph, mu.graph()) && **graph != **mu.graph() {
        return Err(Error::Usage("trace belongs to a different graph".into()));
    }
    let objects: Vec<FiberObject> = factorizations3(mu, limits.enumeration)?
        .into_iter()
        .filter(|o| admissible(&o.alpha))
        .collect();
    let names = objects
        .iter()
        .map(|o| format!("[{} | {} | {}]", o.g, o.alpha, o.f))
        .collect();
    let leq = |i: usize, j: usize| fiber_morphism(&objects[i], &objects[j]).is_some();
    let category = FinCat::poset(names, leq)?;
    Ok(TraceFiber {
        base: mu.clone(),
        objects,
        category,
    })
}

/// The `(h, k)` of a morphism between fiber objects, if one exists.
pub fn fiber_morphism(from: &FiberObject, to: &FiberObject) -> Option<(Trace, Trace)> {
    let h = from.f.strip_suffix(&to.f)?;
    let k = from.g.strip_prefix(&to.g)?;
    let image = k.multiply(&from.alpha).ok()?.multiply(&h).ok()?;
    (image == to.alpha).then_some((h, k))
}

/// Full subcategory of F M(E,I) on the traces of length at most `max_len`.
///
/// Returns the category and its objects; morphisms `α → β` are the pairs
/// `(f, g)` with `g·α·f = β`.
pub fn truncated_factorization_category(
    graph: &Arc<IndependenceGraph>,
    max_len: usize,
    limits: &Limits,
) -> Result<(FinCat, Vec<Trace>)> {
    let mut traces = Vec::new();
    for n in 0..=max_len {
        traces.extend(enumerate_traces(graph, n, limits.enumeration)?);
    }
    let position: HashMap<Trace, usize> = traces
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let mut morphisms = Vec::new();
    let mut data = Vec::new();
    let mut index = HashMap::new();
    for (b, beta) in traces.iter().enumerate() {
        for fac in factorizations3(beta, limits.enumeration)? {
            let a = position[&fac.alpha];
            morphisms.push(Morphism {
                name: format!("({},{}):{}->{}", fac.f, fac.g, fac.alpha, beta),
                dom: a,
                cod: b,
            });
            if morphisms.len() > limits.max_morphisms {
                return Err(Error::budget(
                    "factorization category morphisms",
                    morphisms.len() as u128,
                    limits.max_morphisms as u128,
                ));
            }
            index.insert(fac.clone(), data.len());
            data.push(fac);
        }
    }
    let identities = traces
        .iter()
        .map(|t| {
            index[&Factorization {
                f: Trace::identity(graph),
                alpha: t.clone(),
                g: Trace::identity(graph),
            }]
        })
        .collect();
    let names = traces.iter().map(ToString::to_string).collect();
    let cat = FinCat::from_fn(names, morphisms, identities, limits, |second, first| {
        let (p, q) = (&data[first], &data[second]);
        let key = Factorization {
            f: p.f.multiply(&q.f)?,
            alpha: p.alpha.clone(),
            g: q.g.multiply(&p.g)?,
        };
        index
            .get(&key)
            .copied()
            .ok_or_else(|| Error::Invariant("factorization composite missing".into()))
    })?;
    Ok((cat, traces))
}
