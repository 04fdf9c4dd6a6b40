//! Lower and upper bounds on the cohomological dimension of the
//! factorization category of N^n.

use std::sync::Arc;

use tracehom::dimension::dimension_report;
use tracehom::graph::IndependenceGraph;
use tracehom::Limits;

fn main() -> tracehom::Result<()> {
    for names in [vec!["a"], vec!["a", "b"], vec!["a", "b", "c"]] {
        let g = Arc::new(IndependenceGraph::complete(&names)?);
        let r = dimension_report(&g, 3, 3, &Limits::default())?;
        println!(
            "N^{}: lim^top = {}, union fibers {}/{}, cube fibers {}/{}, dim {:?}",
            names.len(),
            r.lower.top_lim,
            r.upper.union_fibers.acyclic,
            r.upper.union_fibers.traces,
            r.upper.cube_fibers.acyclic,
            r.upper.cube_fibers.traces,
            r.dim
        );
    }
    Ok(())
}
