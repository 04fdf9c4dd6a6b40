//! Independence graphs and their clique structure.
//!
//! An [`IndependenceGraph`] is the presentation of a trace monoid: vertices are
//! generators, and an edge marks a pair of generators that commute. Vertex
//! declaration order is the fixed total order used by every canonical form in
//! the crate.

use std::collections::{BTreeSet, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex sets are stored as bitmasks, so the vertex count is bounded.
pub const MAX_VERTICES: usize = 64;

/// Bitmask over vertex indices.
pub type VertexSet = u64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceGraph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<VertexSet>,
}

/// On-disk form: `{"vertices": [...], "edges": [["a","b"], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

impl IndependenceGraph {
    /// Builds a graph from vertex names and edges given by name.
    ///
    /// Duplicate and reversed edges collapse to one canonical pair; a
    /// self-loop or an undeclared endpoint is an input error.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::Input(format!(
                "{} vertices given, at most {MAX_VERTICES} are supported",
                vertices.len()
            )));
        }
        let names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::Input("empty vertex name".into()));
            }
            if index.insert(name.as_str(), i).is_some() {
                return Err(Error::Input(format!("duplicate vertex `{name}`")));
            }
        }
        let lookup = |name: &str| {
            index.get(name).copied().ok_or_else(|| {
                Error::Input(format!("edge endpoint `{name}` is not a declared vertex"))
            })
        };
        let mut canonical = BTreeSet::new();
        for (a, b) in edges {
            let (i, j) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if i == j {
                return Err(Error::Input(format!(
                    "self-loop on `{}`: the commutation relation must be irreflexive",
                    a.as_ref()
                )));
            }
            canonical.insert((i.min(j), i.max(j)));
        }
        Ok(Self::from_parts(names, canonical.into_iter().collect()))
    }

    fn from_parts(vertices: Vec<String>, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![0; vertices.len()];
        for &(i, j) in &edges {
            adjacency[i] |= 1 << j;
            adjacency[j] |= 1 << i;
        }
        IndependenceGraph {
            vertices,
            edges,
            adjacency,
        }
    }

    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        let edges: Vec<(&str, &str)> = doc
            .edges
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let vertices: Vec<&str> = doc.vertices.iter().map(String::as_str).collect();
        Self::new(&vertices, &edges)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_str(text)?;
        Self::from_document(&doc)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|&(i, j)| (self.vertices[i].clone(), self.vertices[j].clone()))
                .collect(),
        }
    }

    /// Graph on `n` vertices named `prefix1..prefixn` with the given index edges.
    pub fn indexed(prefix: &str, n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        let named: Vec<(String, String)> = edges
            .iter()
            .map(|&(i, j)| {
                let name = |k: usize| names.get(k).cloned().unwrap_or_else(|| format!("#{k}"));
                (name(i), name(j))
            })
            .collect();
        Self::new(&names, &named)
    }

    /// Complete graph: the free commutative monoid on `names`.
    pub fn complete<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 0..names.len() {
            for j in i + 1..names.len() {
                edges.push((names[i].as_ref(), names[j].as_ref()));
            }
        }
        let vertices: Vec<&str> = names.iter().map(AsRef::as_ref).collect();
        Self::new(&vertices, &edges)
    }

    /// Edgeless graph: the free monoid on `names`.
    pub fn edgeless<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let vertices: Vec<&str> = names.iter().map(AsRef::as_ref).collect();
        Self::new::<&str>(&vertices, &[])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Canonical edge list, each pair ordered by vertex index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn all_vertices(&self) -> VertexSet {
        if self.vertices.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertices.len()) - 1
        }
    }

    /// Vertices commuting with `v` (never contains `v` itself).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.adjacency[a] & (1 << b) != 0
    }

    /// Letters that do not commute with `v`, including `v`.
    pub fn dependents(&self, v: usize) -> VertexSet {
        !self.adjacency[v] & self.all_vertices()
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        bits(set).all(|v| set & !(1 << v) & !self.adjacency[v] == 0)
    }

    pub fn names_of(&self, set: VertexSet) -> Vec<String> {
        bits(set).map(|v| self.vertices[v].clone()).collect()
    }
}

/// Ascending vertex indices of a bitmask.
pub fn bits(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

pub fn mask_of(indices: &[usize]) -> VertexSet {
    indices.iter().fold(0, |acc, &v| acc | (1 << v))
}

/// A list of cliques, each sorted by vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSet {
    pub cliques: Vec<Vec<usize>>,
    /// Set when `cliques` is exactly the set of inclusion-maximal cliques.
    pub maximal: bool,
}

impl CliqueSet {
    pub fn masks(&self) -> Vec<VertexSet> {
        self.cliques.iter().map(|c| mask_of(c)).collect()
    }

    /// Number of cliques of each cardinality, starting at 0.
    pub fn counts_by_size(&self) -> Vec<usize> {
        let top = self.cliques.iter().map(Vec::len).max().unwrap_or(0);
        let mut counts = vec![0; top + 1];
        for c in &self.cliques {
            counts[c.len()] += 1;
        }
        counts
    }

    pub fn named(&self, graph: &IndependenceGraph) -> Vec<Vec<String>> {
        self.cliques
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&v| graph.vertex_name(v).to_string())
                    .collect()
            })
            .collect()
    }
}

/// ω(E,I): the largest number of pairwise commuting generators.
pub fn clique_number(graph: &IndependenceGraph) -> usize {
    maximal_cliques(graph)
        .cliques
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0)
}

/// All inclusion-maximal cliques, via Bron–Kerbosch with pivoting.
pub fn maximal_cliques(graph: &IndependenceGraph) -> CliqueSet {
    let mut found = Vec::new();
    bron_kerbosch(graph, 0, graph.all_vertices(), 0, &mut found);
    let mut cliques: Vec<Vec<usize>> = found.into_iter().map(|m| bits(m).collect()).collect();
    cliques.sort();
    CliqueSet {
        cliques,
        maximal: true,
    }
}

fn bron_kerbosch(
    graph: &IndependenceGraph,
    current: VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if candidates == 0 && excluded == 0 {
        out.push(current);
        return;
    }
    // pivot with the most candidate neighbours
    let pivot = bits(candidates | excluded)
        .max_by_key(|&u| (candidates & graph.neighbors(u)).count_ones())
        .expect("candidates or excluded is nonempty");
    for v in bits(candidates & !graph.neighbors(pivot)) {
        let nv = graph.neighbors(v);
        bron_kerbosch(
            graph,
            current | (1 << v),
            candidates & nv,
            excluded & nv,
            out,
        );
        candidates &= !(1 << v);
        excluded |= 1 << v;
    }
}

/// Every clique including the empty one, ordered by size and then
/// lexicographically.
pub fn all_cliques(graph: &IndependenceGraph) -> CliqueSet {
    let mut found = vec![0];
    extend_cliques(graph, 0, graph.all_vertices(), &mut found);
    let mut cliques: Vec<Vec<usize>> = found.into_iter().map(|m| bits(m).collect()).collect();
    cliques.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    CliqueSet {
        cliques,
        maximal: false,
    }
}

fn extend_cliques(
    graph: &IndependenceGraph,
    current: VertexSet,
    allowed: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    for v in bits(allowed) {
        let next = current | (1 << v);
        out.push(next);
        // only larger indices, so each clique is produced once
        let later = allowed & graph.neighbors(v) & !((1u64 << v) | ((1u64 << v) - 1));
        extend_cliques(graph, next, later, out);
    }
}
