//! The clique resolution of the trivial module, checked for exactness, and
//! the global dimension of the monoid algebra.

use std::sync::Arc;

use tracehom::graph::IndependenceGraph;
use tracehom::syzygy::{global_dimension_report, FieldSpec};
use tracehom::Limits;

fn main() -> tracehom::Result<()> {
    let c4 = Arc::new(IndependenceGraph::indexed(
        "x",
        4,
        &[(0, 1), (1, 2), (2, 3), (3, 0)],
    )?);
    for field in [FieldSpec::Rationals, FieldSpec::prime(2)?] {
        let report = global_dimension_report(&c4, field, 6, &Limits::default())?;
        println!(
            "over {field}: ext dims {:?}, gld {}",
            report.ext_dims, report.gld
        );
        print!("{}", report.table());
    }
    Ok(())
}
