#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::path::PathBuf;
use std::sync::Arc;

use tracehom::graph::IndependenceGraph;

pub fn data(path: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(path)
}

pub fn load_graph(name: &str) -> Arc<IndependenceGraph> {
    Arc::new(IndependenceGraph::load(data(&format!("graphs/{name}.json"))).unwrap())
}

pub fn c4() -> Arc<IndependenceGraph> {
    load_graph("cycle4")
}

pub fn square_with_triangle() -> Arc<IndependenceGraph> {
    load_graph("square_with_triangle")
}

/// Graphs every cross-check runs on.
pub fn test_graphs() -> Vec<(&'static str, Arc<IndependenceGraph>)> {
    [
        "empty",
        "single",
        "free2",
        "free3",
        "plane",
        "cube3",
        "cycle4",
        "square_with_triangle",
    ]
    .into_iter()
    .map(|n| (n, load_graph(n)))
    .collect()
}

/// All words equivalent to `word` under swaps of adjacent commuting letters.
pub fn swap_class(g: &IndependenceGraph, word: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            if g.commute(w[i], w[i + 1]) {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

/// Lexicographically least word of the class, a canonical form independent
/// of the Foata construction.
pub fn canonical_word(g: &IndependenceGraph, word: &[usize]) -> Vec<usize> {
    swap_class(g, word).into_iter().next().unwrap()
}

pub fn all_words(letters: usize, len: usize) -> Vec<Vec<usize>> {
    let mut words = vec![vec![]];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                (0..letters).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    words
}

/// Number of distinct traces of length `len`, by swap classes of words.
pub fn brute_trace_count(g: &IndependenceGraph, len: usize) -> usize {
    all_words(g.vertex_count(), len)
        .iter()
        .map(|w| canonical_word(g, w))
        .collect::<HashSet<_>>()
        .len()
}

/// Distinct triples `(g, α, f)` with `g·α·f = mu`, read off every cut of
/// every word representing `mu`.
pub fn brute_factorizations(g: &IndependenceGraph, word: &[usize]) -> usize {
    let mut triples = HashSet::new();
    for w in swap_class(g, word) {
        for i in 0..=w.len() {
            for j in i..=w.len() {
                triples.insert((
                    canonical_word(g, &w[..i]),
                    canonical_word(g, &w[i..j]),
                    canonical_word(g, &w[j..]),
                ));
            }
        }
    }
    triples.len()
}
