//! Arithmetic in the free partially commutative monoid M(E,I).
//!
//! A [`Trace`] is stored in Foata normal form: a sequence of nonempty clique
//! steps where every letter of a step depends on some letter of the step
//! before it. Two words give equal traces exactly when they are related by
//! swapping adjacent commuting letters.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{all_cliques, bits, IndependenceGraph, VertexSet};

#[derive(Clone)]
pub struct Trace {
    graph: Arc<IndependenceGraph>,
    steps: Vec<VertexSet>,
}

impl Trace {
    pub fn identity(graph: &Arc<IndependenceGraph>) -> Self {
        Trace {
            graph: Arc::clone(graph),
            steps: Vec::new(),
        }
    }

    pub fn letter(graph: &Arc<IndependenceGraph>, v: usize) -> Self {
        let mut t = Self::identity(graph);
        t.push(v);
        t
    }

    /// Normal form of a word given as vertex indices.
    pub fn from_letters(graph: &Arc<IndependenceGraph>, word: &[usize]) -> Result<Self> {
        let mut t = Self::identity(graph);
        for &v in word {
            if v >= graph.vertex_count() {
                return Err(Error::Input(format!("letter index {v} is not a vertex")));
            }
            t.push(v);
        }
        Ok(t)
    }

    /// Normal form of a word written with vertex names.
    ///
    /// Letters may be separated by whitespace or commas; unseparated runs are
    /// split greedily by longest matching vertex name, so `"x1x3"` reads as
    /// `x1 x3`.
    pub fn parse(graph: &Arc<IndependenceGraph>, word: &str) -> Result<Self> {
        let letters = parse_word(graph, word)?;
        Self::from_letters(graph, &letters)
    }

    /// Rebuilds a trace from explicitly listed steps, normalizing them.
    pub fn from_named_steps<S: AsRef<str>>(
        graph: &Arc<IndependenceGraph>,
        steps: &[Vec<S>],
    ) -> Result<Self> {
        let mut word = Vec::new();
        for step in steps {
            for name in step {
                let name = name.as_ref();
                word.push(
                    graph
                        .vertex_index(name)
                        .ok_or_else(|| Error::Input(format!("unknown letter `{name}`")))?,
                );
            }
        }
        Self::from_letters(graph, &word)
    }

    /// Appends one letter, keeping Foata normal form.
    pub fn push(&mut self, v: usize) {
        let blocking = self.graph.dependents(v);
        let slot = match self.steps.iter().rposition(|&s| s & blocking != 0) {
            Some(j) => j + 1,
            None => 0,
        };
        if slot == self.steps.len() {
            self.steps.push(1 << v);
        } else {
            self.steps[slot] |= 1 << v;
        }
    }

    pub fn graph(&self) -> &Arc<IndependenceGraph> {
        &self.graph
    }

    pub fn steps(&self) -> &[VertexSet] {
        &self.steps
    }

    pub fn step_letters(&self) -> Vec<Vec<usize>> {
        self.steps.iter().map(|&s| bits(s).collect()).collect()
    }

    /// The canonical word: steps concatenated, each in vertex order.
    pub fn letters(&self) -> Vec<usize> {
        self.steps.iter().flat_map(|&s| bits(s)).collect()
    }

    /// |μ|, the grading degree.
    pub fn len(&self) -> usize {
        self.steps.iter().map(|s| s.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.steps.is_empty()
    }

    /// Union of the letters occurring in the trace.
    pub fn support(&self) -> VertexSet {
        self.steps.iter().fold(0, |acc, s| acc | s)
    }

    /// A trace made of distinct pairwise commuting letters is a single step.
    pub fn is_clique_step(&self) -> bool {
        self.steps.len() <= 1
    }

    fn same_graph(&self, other: &Trace) -> bool {
        Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph
    }

    pub fn multiply(&self, other: &Trace) -> Result<Trace> {
        if !self.same_graph(other) {
            return Err(Error::Usage(
                "cannot multiply traces over different graphs".into(),
            ));
        }
        let mut out = self.clone();
        for v in other.letters() {
            out.push(v);
        }
        Ok(out)
    }

    /// Letters `e` with `self = μ'·e` for some μ'.
    pub fn right_removable(&self) -> VertexSet {
        let mut later = 0;
        let mut out = 0;
        for &step in self.steps.iter().rev() {
            for v in bits(step) {
                if self.graph.dependents(v) & later == 0 {
                    out |= 1 << v;
                }
            }
            later |= step;
        }
        out
    }

    /// Letters `e` with `self = e·μ'` for some μ'.
    pub fn left_removable(&self) -> VertexSet {
        self.steps.first().copied().unwrap_or(0)
    }

    fn without_occurrence(&self, step: usize, v: usize) -> Trace {
        let mut out = Trace::identity(&self.graph);
        for (j, &s) in self.steps.iter().enumerate() {
            let s = if j == step { s & !(1 << v) } else { s };
            for u in bits(s) {
                out.push(u);
            }
        }
        out
    }

    /// μ' with `self = μ'·e`, if `e` can be cancelled on the right.
    pub fn cancel_right_letter(&self, v: usize) -> Option<Trace> {
        if self.right_removable() & (1 << v) == 0 {
            return None;
        }
        let step = self.steps.iter().rposition(|s| s & (1 << v) != 0)?;
        Some(self.without_occurrence(step, v))
    }

    /// μ' with `self = e·μ'`, if `e` can be cancelled on the left.
    pub fn cancel_left_letter(&self, v: usize) -> Option<Trace> {
        if self.left_removable() & (1 << v) == 0 {
            return None;
        }
        Some(self.without_occurrence(0, v))
    }

    /// The unique `h` with `self = h·suffix`, if it exists.
    pub fn strip_suffix(&self, suffix: &Trace) -> Option<Trace> {
        let mut rest = self.clone();
        for v in suffix.letters().into_iter().rev() {
            rest = rest.cancel_right_letter(v)?;
        }
        Some(rest)
    }

    /// The unique `k` with `self = prefix·k`, if it exists.
    pub fn strip_prefix(&self, prefix: &Trace) -> Option<Trace> {
        let mut rest = self.clone();
        for v in prefix.letters() {
            rest = rest.cancel_left_letter(v)?;
        }
        Some(rest)
    }

    pub fn named_steps(&self) -> Vec<Vec<String>> {
        self.steps.iter().map(|&s| self.graph.names_of(s)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.named_steps()).expect("string lists serialize")
    }

    fn sort_key(&self) -> (usize, Vec<Vec<usize>>) {
        (self.len(), self.step_letters())
    }
}

impl PartialEq for Trace {
    fn eq(&self, other: &Self) -> bool {
        self.steps == other.steps && self.same_graph(other)
    }
}

impl Eq for Trace {}

impl Hash for Trace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.steps.hash(state);
    }
}

impl PartialOrd for Trace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by length, then lexicographically by step contents.
impl Ord for Trace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Debug for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Trace({self})")
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("1");
        }
        for step in self.named_steps() {
            write!(f, "({})", step.join(" "))?;
        }
        Ok(())
    }
}

/// Splits a word into vertex indices.
pub fn parse_word(graph: &IndependenceGraph, word: &str) -> Result<Vec<usize>> {
    let mut letters = Vec::new();
    for token in word
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
    {
        if let Some(v) = graph.vertex_index(token) {
            letters.push(v);
            continue;
        }
        let mut rest = token;
        while !rest.is_empty() {
            let best = graph
                .vertices()
                .iter()
                .enumerate()
                .filter(|(_, name)| rest.starts_with(name.as_str()))
                .max_by_key(|(_, name)| name.len());
            match best {
                Some((v, name)) => {
                    letters.push(v);
                    rest = &rest[name.len()..];
                }
                None => {
                    let bad: String = rest
                        .chars()
                        .take_while(|c| c.is_alphanumeric() || *c == '_')
                        .collect();
                    let bad = if bad.is_empty() {
                        rest.chars().take(1).collect()
                    } else {
                        bad
                    };
                    return Err(Error::Input(format!(
                        "unknown letter `{bad}` in word `{word}`"
                    )));
                }
            }
        }
    }
    Ok(letters)
}

/// All traces of length exactly `len`, sorted canonically.
pub fn enumerate_traces(
    graph: &Arc<IndependenceGraph>,
    len: usize,
    budget: u64,
) -> Result<Vec<Trace>> {
    let words = (graph.vertex_count() as u128)
        .checked_pow(len as u32)
        .unwrap_or(u128::MAX);
    if words > budget as u128 {
        return Err(Error::budget(
            format!("enumerating traces of length {len}"),
            words,
            budget as u128,
        ));
    }
    let mut level: HashSet<Trace> = HashSet::from([Trace::identity(graph)]);
    for _ in 0..len {
        let mut next = HashSet::with_capacity(level.len() * graph.vertex_count());
        for t in &level {
            for v in 0..graph.vertex_count() {
                let mut u = t.clone();
                u.push(v);
                next.insert(u);
            }
        }
        level = next;
    }
    let mut out: Vec<Trace> = level.into_iter().collect();
    out.sort();
    Ok(out)
}

/// All pairs `(p, s)` with `mu = p·s`, ordered by the prefix.
pub fn splits(mu: &Trace, budget: u64) -> Result<Vec<(Trace, Trace)>> {
    let mut seen: HashSet<Trace> = HashSet::from([mu.clone()]);
    let mut queue = VecDeque::from([mu.clone()]);
    while let Some(p) = queue.pop_front() {
        for v in bits(p.right_removable()) {
            let shorter = p.cancel_right_letter(v).expect("letter is removable");
            if seen.insert(shorter.clone()) {
                if seen.len() as u64 > budget {
                    return Err(Error::budget(
                        "enumerating divisors",
                        seen.len() as u128,
                        budget as u128,
                    ));
                }
                queue.push_back(shorter);
            }
        }
    }
    let mut prefixes: Vec<Trace> = seen.into_iter().collect();
    prefixes.sort();
    Ok(prefixes
        .into_iter()
        .map(|p| {
            let s = mu.strip_prefix(&p).expect("p is a prefix of mu");
            (p, s)
        })
        .collect())
}

/// A factorization `mu = g·alpha·f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    pub f: Trace,
    pub alpha: Trace,
    pub g: Trace,
}

/// All triples `(f, alpha, g)` with `g·alpha·f = mu`.
pub fn factorizations3(mu: &Trace, budget: u64) -> Result<Vec<Factorization>> {
    let mut out = Vec::new();
    for (rest, f) in splits(mu, budget)? {
        for (g, alpha) in splits(&rest, budget)? {
            out.push(Factorization {
                f: f.clone(),
                alpha,
                g,
            });
            if out.len() as u64 > budget {
                return Err(Error::budget(
                    "enumerating factorizations",
                    out.len() as u128,
                    budget as u128,
                ));
            }
        }
    }
    out.sort_by(|a, b| (&a.alpha, &a.f, &a.g).cmp(&(&b.alpha, &b.f, &b.g)));
    Ok(out)
}

/// Coefficients `(-1)^k · #{k-cliques}` for `k = 0..=ω`.
pub fn clique_polynomial(graph: &IndependenceGraph) -> Vec<i64> {
    all_cliques(graph)
        .counts_by_size()
        .into_iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .collect()
}

/// Number of traces of each length `0..=n_max`, from the reciprocal of the
/// clique polynomial.
pub fn growth_coefficients(graph: &IndependenceGraph, n_max: usize) -> Vec<BigInt> {
    let c = clique_polynomial(graph);
    let mut a: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    a.push(BigInt::from(1));
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for (k, &ck) in c.iter().enumerate().skip(1).take_while(|(k, _)| *k <= n) {
            acc -= BigInt::from(ck) * &a[n - k];
        }
        a.push(acc);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_with_triangle() -> Arc<IndependenceGraph> {
        Arc::new(
            IndependenceGraph::new(
                &["a", "b", "c", "d", "e"],
                &[
                    ("a", "b"),
                    ("b", "c"),
                    ("c", "d"),
                    ("a", "d"),
                    ("a", "e"),
                    ("d", "e"),
                ],
            )
            .unwrap(),
        )
    }

    #[test]
    fn foata_steps() {
        let g = square_with_triangle();
        assert!(Trace::parse(&g, "").unwrap().is_identity());
        assert_eq!(
            Trace::parse(&g, "ba").unwrap().step_letters(),
            vec![vec![0, 1]]
        );
        // a and c do not commute, b commutes with both
        assert_eq!(
            Trace::parse(&g, "cab").unwrap().step_letters(),
            vec![vec![1, 2], vec![0]]
        );
    }

    #[test]
    fn unknown_letter_is_named() {
        let g = square_with_triangle();
        let err = Trace::parse(&g, "a z b").unwrap_err();
        assert!(err.to_string().contains("`z`"), "{err}");
    }

    #[test]
    fn cancellation() {
        let g = square_with_triangle();
        let mu = Trace::parse(&g, "c a b d").unwrap();
        let s = Trace::parse(&g, "b d").unwrap();
        let h = mu.strip_suffix(&s).unwrap();
        assert_eq!(h.multiply(&s).unwrap(), mu);
        assert!(mu.strip_suffix(&Trace::parse(&g, "c").unwrap()).is_none());
        let k = mu.strip_prefix(&Trace::parse(&g, "b").unwrap()).unwrap();
        assert_eq!(Trace::parse(&g, "b").unwrap().multiply(&k).unwrap(), mu);
    }

    #[test]
    fn enumeration_budget() {
        let g = square_with_triangle();
        let err = enumerate_traces(&g, 10, 1000).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn growth_examples() {
        let one = IndependenceGraph::edgeless(&["a"]).unwrap();
        assert_eq!(growth_coefficients(&one, 3), vec![BigInt::from(1); 4]);
        let two = IndependenceGraph::complete(&["a", "b"]).unwrap();
        let expected: Vec<BigInt> = [1, 2, 3].into_iter().map(BigInt::from).collect();
        assert_eq!(growth_coefficients(&two, 2), expected);
    }
}
