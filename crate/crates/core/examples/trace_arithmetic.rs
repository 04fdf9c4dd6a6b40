//! Foata normal forms, products and factorizations of traces on the 4-cycle.

use std::sync::Arc;

use tracehom::graph::IndependenceGraph;
use tracehom::trace::{enumerate_traces, factorizations3, splits, Trace};

fn main() -> tracehom::Result<()> {
    let g = Arc::new(IndependenceGraph::indexed(
        "x",
        4,
        &[(0, 1), (1, 2), (2, 3), (3, 0)],
    )?);
    let u = Trace::parse(&g, "x1 x3 x2")?;
    let v = Trace::parse(&g, "x4 x2")?;
    println!("u = {u}, v = {v}");
    println!("uv = {}", u.multiply(&v)?);
    println!(
        "x2 x1 == x1 x2: {}",
        Trace::parse(&g, "x2 x1")? == Trace::parse(&g, "x1 x2")?
    );
    println!(
        "x3 x1 == x1 x3: {}",
        Trace::parse(&g, "x3 x1")? == Trace::parse(&g, "x1 x3")?
    );

    let mu = Trace::parse(&g, "x1 x2")?;
    println!("prefix splits of {mu}:");
    for (p, s) in splits(&mu, 1000)? {
        println!("  {p} . {s}");
    }
    println!(
        "{mu} has {} factorizations g.alpha.f",
        factorizations3(&mu, 1000)?.len()
    );
    println!(
        "traces of length 3: {}",
        enumerate_traces(&g, 3, 10_000)?.len()
    );
    Ok(())
}
