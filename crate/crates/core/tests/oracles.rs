//! Cross-checks of the library against independent brute-force oracles.

mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use tracehom::fincat::{
    factorization_category, point, theta, theta_power, truncated_factorization_category,
};
use tracehom::graph::{
    all_cliques, bits, clique_number, maximal_cliques, IndependenceGraph, VertexSet,
};
use tracehom::homology::FGAbGroup;
use tracehom::limcoh::random::random_diagram;
use tracehom::limcoh::{lim_n, AbDiagram};
use tracehom::trace::{enumerate_traces, factorizations3, growth_coefficients, Trace};
use tracehom::Limits;

use common::*;

fn brute_cliques(g: &IndependenceGraph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    (0..1u64 << n).filter(|&s| g.is_clique(s)).collect()
}

#[test]
fn maximal_cliques_match_subset_scan() {
    for (name, g) in test_graphs() {
        let cliques = brute_cliques(&g);
        let mut maximal: Vec<VertexSet> = cliques
            .iter()
            .copied()
            .filter(|&s| !cliques.iter().any(|&t| t != s && t & s == s))
            .collect();
        maximal.sort();
        let mut got = maximal_cliques(&g).masks();
        got.sort();
        assert_eq!(got, maximal, "{name}");
        let omega = cliques
            .iter()
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap();
        assert_eq!(clique_number(&g), omega, "{name}");
        let mut counts = vec![0; omega + 1];
        for s in &cliques {
            counts[s.count_ones() as usize] += 1;
        }
        assert_eq!(all_cliques(&g).counts_by_size(), counts, "{name}");
    }
}

#[test]
fn trace_counts_match_word_classes() {
    for (name, g) in test_graphs() {
        let growth = growth_coefficients(&g, 5);
        let max_len = if g.vertex_count() > 4 { 4 } else { 5 };
        for len in 0..=max_len {
            let brute = brute_trace_count(&g, len);
            assert_eq!(
                enumerate_traces(&g, len, 1_000_000).unwrap().len(),
                brute,
                "{name} length {len}"
            );
            assert_eq!(growth[len], BigInt::from(brute), "{name} length {len}");
        }
    }
}

#[test]
fn factorization_counts_match_word_cuts() {
    for g in [c4(), square_with_triangle()] {
        for len in 0..=3 {
            for mu in enumerate_traces(&g, len, 1_000_000).unwrap() {
                let word = mu.letters();
                assert_eq!(
                    factorizations3(&mu, 1_000_000).unwrap().len(),
                    brute_factorizations(&g, &word),
                    "{mu}"
                );
            }
        }
    }
}

#[test]
fn factorization_count_on_the_square() {
    let g = c4();
    let mu = Trace::parse(&g, "x1 x2").unwrap();
    assert_eq!(brute_factorizations(&g, &mu.letters()), 9);
    assert_eq!(factorizations3(&mu, 1000).unwrap().len(), 9);
}

/// Morphisms of the factorization category are the triples `(u, v, w)` of
/// morphisms with `w∘v∘u` defined.
fn brute_factorization_morphisms(c: &tracehom::fincat::FinCat) -> usize {
    let m = c.morphism_count();
    let mut count = 0;
    for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                if c.compose(v, u).and_then(|vu| c.compose(w, vu)).is_some() {
                    count += 1;
                }
            }
        }
    }
    count
}

#[test]
fn factorization_category_sizes() {
    let limits = Limits::default();
    for c in [point(), theta(), theta_power(2).unwrap()] {
        let f = factorization_category(&c, &limits).unwrap();
        assert_eq!(f.object_count(), c.morphism_count());
        assert_eq!(f.morphism_count(), brute_factorization_morphisms(&c));
    }
}

#[test]
fn truncated_factorization_category_of_one_letter() {
    let g = Arc::new(IndependenceGraph::new::<&str>(&["a"], &[]).unwrap());
    let (cat, objects) = truncated_factorization_category(&g, 3, &Limits::default()).unwrap();
    assert_eq!(objects.len(), 4);
    // a^i -> a^j has j - i + 1 morphisms for i <= j
    let expected: usize = (0..=3).flat_map(|i| (i..=3).map(move |j| j - i + 1)).sum();
    assert_eq!(cat.morphism_count(), expected);
}

/// `lim⁰` of a diagram of finite groups as the number of compatible
/// families, counted over every element of the product.
fn brute_lim0_order(f: &AbDiagram) -> usize {
    let base = f.base();
    let orders: Vec<Vec<i64>> = (0..base.object_count())
        .map(|x| {
            f.orders(x)
                .iter()
                .map(|o| i64::try_from(o).unwrap())
                .collect()
        })
        .collect();
    let coords: Vec<(usize, i64)> = orders
        .iter()
        .enumerate()
        .flat_map(|(x, o)| o.iter().map(move |&m| (x, m)))
        .collect();
    let total: i64 = coords.iter().map(|&(_, m)| m).product();
    let mut count = 0;
    for mut code in 0..total {
        let mut element: Vec<Vec<i64>> = orders.iter().map(|o| vec![0; o.len()]).collect();
        let mut next = vec![0; base.object_count()];
        for &(x, m) in &coords {
            element[x][next[x]] = code % m;
            next[x] += 1;
            code /= m;
        }
        let compatible = (0..base.morphism_count()).all(|a| {
            let (s, t) = (base.dom(a), base.cod(a));
            let map = f.map(a);
            (0..orders[t].len()).all(|i| {
                let image: BigInt = (0..orders[s].len())
                    .map(|j| &map[(i, j)] * element[s][j])
                    .sum();
                let m = BigInt::from(orders[t][i]);
                ((image - element[t][i]) % &m + &m) % &m == BigInt::from(0)
            })
        });
        if compatible {
            count += 1;
        }
    }
    count
}

fn finite_random_diagram(base: &Arc<tracehom::fincat::FinCat>, seed: u64) -> Option<AbDiagram> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let f = random_diagram(base, &mut rng).ok()?;
    let finite =
        (0..base.object_count()).all(|x| f.orders(x).iter().all(|o| *o != BigInt::from(0)));
    let size: f64 = (0..base.object_count())
        .flat_map(|x| {
            f.orders(x)
                .iter()
                .map(|o| o.to_string().parse::<f64>().unwrap())
                .collect::<Vec<_>>()
        })
        .product();
    (finite && size <= 50_000.0).then_some(f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn foata_equality_is_swap_equivalence(u in proptest::collection::vec(0usize..5, 0..7),
                                          v in proptest::collection::vec(0usize..5, 0..7)) {
        let g = square_with_triangle();
        let tu = Trace::from_letters(&g, &u).unwrap();
        let tv = Trace::from_letters(&g, &v).unwrap();
        let same = u.len() == v.len() && swap_class(&g, &u).contains(&v);
        prop_assert_eq!(tu == tv, same);
        prop_assert_eq!(tu.letters().len(), u.len());
        prop_assert!(swap_class(&g, &u).contains(&tu.letters()));
    }

    #[test]
    fn multiplication_is_concatenation(u in proptest::collection::vec(0usize..4, 0..6),
                                       v in proptest::collection::vec(0usize..4, 0..6)) {
        let g = c4();
        let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
        let product = Trace::from_letters(&g, &u).unwrap().multiply(&Trace::from_letters(&g, &v).unwrap()).unwrap();
        prop_assert_eq!(product, Trace::from_letters(&g, &uv).unwrap());
    }

    #[test]
    fn lim0_counts_compatible_families(seed in 0u64..10_000) {
        let theta = Arc::new(theta());
        let square = Arc::new(theta_power(2).unwrap());
        for base in [theta, square] {
            if let Some(f) = finite_random_diagram(&base, seed) {
                let lim0 = lim_n(&f, 0, &Limits::default()).unwrap();
                prop_assert!(lim0.is_finite());
                let order = lim0.order().unwrap();
                prop_assert_eq!(order, BigInt::from(brute_lim0_order(&f)));
            }
        }
    }
}

#[test]
fn lim0_of_constant_finite_groups() {
    for a in [
        FGAbGroup::cyclic(2),
        FGAbGroup::cyclic(6),
        FGAbGroup::from_cyclic_orders([BigInt::from(2), BigInt::from(3)]),
    ] {
        let f = AbDiagram::constant(Arc::new(theta()), &a);
        assert_eq!(lim_n(&f, 0, &Limits::default()).unwrap(), a);
        assert_eq!(
            brute_lim0_order(&f),
            usize::try_from(a.order().unwrap()).unwrap()
        );
    }
}

#[test]
fn bits_roundtrip() {
    assert_eq!(bits(0b1011).collect::<Vec<_>>(), vec![0, 1, 3]);
}

#[test]
fn random_finite_diagrams_occur() {
    let base = Arc::new(theta());
    let found = (0..200)
        .filter(|&s| finite_random_diagram(&base, s).is_some())
        .count();
    assert!(found >= 20, "{found}");
}
