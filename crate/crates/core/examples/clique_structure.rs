//! Clique number, maximal cliques and the clique polynomial of the graph with
//! maximal cliques {a,b}, {b,c}, {c,d}, {a,d,e}.

use tracehom::graph::{all_cliques, clique_number, maximal_cliques, IndependenceGraph};
use tracehom::trace::{clique_polynomial, growth_coefficients};

fn main() -> tracehom::Result<()> {
    let g = IndependenceGraph::new(
        &["a", "b", "c", "d", "e"],
        &[
            ("a", "b"),
            ("b", "c"),
            ("c", "d"),
            ("a", "d"),
            ("a", "e"),
            ("d", "e"),
        ],
    )?;
    println!("omega = {}", clique_number(&g));
    for clique in maximal_cliques(&g).named(&g) {
        println!("maximal clique {{{}}}", clique.join(","));
    }
    println!("cliques by size: {:?}", all_cliques(&g).counts_by_size());
    println!("clique polynomial: {:?}", clique_polynomial(&g));
    let counts: Vec<String> = growth_coefficients(&g, 8)
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("traces of length 0..=8: {}", counts.join(" "));
    Ok(())
}
