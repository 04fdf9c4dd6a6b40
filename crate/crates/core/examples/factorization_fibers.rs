//! Fibers of the clique subcategories of the factorization category over
//! traces, and their acyclicity.

use std::sync::Arc;

use tracehom::fincat::{cube_fiber, union_fiber};
use tracehom::graph::IndependenceGraph;
use tracehom::homology::is_acyclic;
use tracehom::trace::Trace;
use tracehom::Limits;

fn main() -> tracehom::Result<()> {
    let limits = Limits::default();
    let single = Arc::new(IndependenceGraph::new::<&str>(&["a"], &[])?);
    for k in 0..=5 {
        let mu = Trace::parse(&single, &"a".repeat(k))?;
        let fiber = cube_fiber(&single, &mu, &limits)?;
        let cert = is_acyclic(&fiber.category, 3, &limits)?;
        println!(
            "Theta_a/a^{k}: {} objects, acyclic {}",
            fiber.objects.len(),
            cert.acyclic
        );
    }

    let c4 = Arc::new(IndependenceGraph::indexed(
        "x",
        4,
        &[(0, 1), (1, 2), (2, 3), (3, 0)],
    )?);
    for word in ["", "x1x3", "x1x2", "x1x2x3"] {
        let mu = Trace::parse(&c4, word)?;
        let fiber = union_fiber(&c4, &mu, &limits)?;
        let cert = is_acyclic(&fiber.category, 3, &limits)?;
        println!(
            "C4 over {mu}: {} objects, acyclic {}",
            fiber.objects.len(),
            cert.acyclic
        );
    }
    Ok(())
}
