use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::field::FieldSpec;
use crate::error::{Error, Result};
use crate::graph::{all_cliques, bits, IndependenceGraph, VertexSet};
use crate::homology::SparseMatrix;
use crate::limits::Limits;
use crate::trace::{enumerate_traces, Trace};

/// The free resolution `0 → C_ω → … → C_1 → C_0 → k → 0` of the trivial
/// module over `k[M(E,I)]`.
///
/// `C_n` is free on the `n`-cliques, each generator in internal degree `n`,
/// and `d[S] = Σ_j (−1)^{j} e_j·[S ∖ e_j]` where `e_0 < e_1 < …` lists `S` in
/// vertex order. The augmentation `C_0 = k[M] → k` keeps the identity trace
/// and kills every trace of positive length.
#[derive(Clone, Debug)]
pub struct CliqueResolution {
    graph: Arc<IndependenceGraph>,
    field: FieldSpec,
    /// `cliques[n]` lists the generators of `C_n`.
    cliques: Vec<Vec<VertexSet>>,
}

pub fn build_resolution(graph: &Arc<IndependenceGraph>, field: FieldSpec) -> CliqueResolution {
    let masks = all_cliques(graph).masks();
    CliqueResolution::from_cliques(graph, field, masks).expect("cliques of the graph")
}

impl CliqueResolution {
    /// A complex of the same shape on a chosen list of cliques. With every
    /// clique this is the resolution; dropping some gives a complex the
    /// exactness checker must reject.
    pub fn from_cliques(
        graph: &Arc<IndependenceGraph>,
        field: FieldSpec,
        cliques: Vec<VertexSet>,
    ) -> Result<Self> {
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new()];
        for c in cliques {
            if !graph.is_clique(c) || c & !graph.all_vertices() != 0 {
                return Err(Error::Input(format!(
                    "{:?} is not a clique",
                    graph.names_of(c)
                )));
            }
            let n = c.count_ones() as usize;
            if by_size.len() <= n {
                by_size.resize(n + 1, Vec::new());
            }
            if !by_size[n].contains(&c) {
                by_size[n].push(c);
            }
        }
        for level in &mut by_size {
            level.sort_by_key(|&c| bits(c).collect::<Vec<_>>());
        }
        Ok(CliqueResolution {
            graph: graph.clone(),
            field,
            cliques: by_size,
        })
    }

    pub fn graph(&self) -> &Arc<IndependenceGraph> {
        &self.graph
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Length of the resolution, the largest clique size present.
    pub fn length(&self) -> usize {
        self.cliques.len() - 1
    }

    /// Rank of each free module `C_n`.
    pub fn term_ranks(&self) -> Vec<usize> {
        self.cliques.iter().map(Vec::len).collect()
    }

    pub fn generators(&self, n: usize) -> &[VertexSet] {
        &self.cliques[n]
    }

    /// `d[S]` as `(sign, letter, face)` terms.
    pub fn boundary(&self, clique: VertexSet) -> Vec<(i64, usize, VertexSet)> {
        bits(clique)
            .enumerate()
            .map(|(pos, v)| (if pos % 2 == 0 { 1 } else { -1 }, v, clique & !(1 << v)))
            .collect()
    }
}

/// Dimensions, ranks and exactness of one internal degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPieceReport {
    /// Internal degree.
    pub m: usize,
    /// `dim (C_n)_m` for `n = 0..=length`.
    pub dims: Vec<usize>,
    /// `dim k_m`: 1 in degree 0, else 0.
    pub augmentation_dim: usize,
    /// `ranks[0]` is the rank of the augmentation, `ranks[n]` that of `d_n`.
    pub ranks: Vec<usize>,
    /// Exactness at `k`, then at `C_0 … C_length`.
    pub exact: Vec<bool>,
    /// `Σ (−1)^n dim (C_n)_m − dim k_m`.
    pub euler: i64,
}

impl GradedPieceReport {
    pub fn is_exact(&self) -> bool {
        self.exact.iter().all(|&e| e)
    }
}

/// A cycle that is not a boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessWitness {
    pub m: usize,
    /// Homological degree of the cycle; `None` for the augmentation target.
    pub degree: Option<usize>,
    /// Terms `coefficient · trace ⊗ [clique]`.
    pub terms: Vec<String>,
}

impl fmt::Display for ExactnessWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            Some(n) => write!(
                f,
                "in internal degree {}, C_{n} has the cycle {} outside the image",
                self.m,
                self.terms.join(" + ")
            ),
            None => write!(
                f,
                "in internal degree {}, the augmentation is not surjective",
                self.m
            ),
        }
    }
}

struct Piece {
    /// basis of `(C_n)_m` for each n: (trace, clique)
    bases: Vec<Vec<(Trace, VertexSet)>>,
    /// `d_n` for n >= 1 at index n, augmentation at index 0
    maps: Vec<SparseMatrix>,
    augmentation_dim: usize,
}

fn build_piece(
    r: &CliqueResolution,
    m: usize,
    traces: &[Vec<Trace>],
    index: &[HashMap<Trace, usize>],
) -> Piece {
    let top = r.length();
    let bases: Vec<Vec<(Trace, VertexSet)>> = (0..=top)
        .map(|n| {
            if n > m {
                return Vec::new();
            }
            let mut basis = Vec::new();
            for t in &traces[m - n] {
                for &c in &r.cliques[n] {
                    basis.push((t.clone(), c));
                }
            }
            basis
        })
        .collect();
    let positions: Vec<HashMap<(usize, VertexSet), usize>> = (0..=top)
        .map(|n| {
            bases[n]
                .iter()
                .enumerate()
                .map(|(i, (t, c))| ((index[t.len()][t], *c), i))
                .collect()
        })
        .collect();
    let augmentation_dim = usize::from(m == 0);
    let mut maps = Vec::with_capacity(top + 1);
    let mut eps = SparseMatrix::zeros(augmentation_dim, 0);
    for (t, _) in &bases[0] {
        eps.push_column(if t.is_identity() {
            vec![(0, BigInt::from(1))]
        } else {
            Vec::new()
        });
    }
    maps.push(eps);
    for n in 1..=top {
        let mut d = SparseMatrix::zeros(bases[n - 1].len(), 0);
        for (t, c) in &bases[n] {
            let mut col = Vec::new();
            for (sign, v, face) in r.boundary(*c) {
                let mut u = t.clone();
                u.push(v);
                let key = (index[u.len()][&u], face);
                if let Some(&row) = positions[n - 1].get(&key) {
                    col.push((row, BigInt::from(sign)));
                }
            }
            d.push_column(col);
        }
        maps.push(d);
    }
    Piece {
        bases,
        maps,
        augmentation_dim,
    }
}

fn witness(r: &CliqueResolution, piece: &Piece, m: usize, n: usize) -> ExactnessWitness {
    let field = r.field;
    let top = r.length();
    // kernel of the map out of C_n (d_n, or the augmentation for n = 0)
    let out = &piece.maps[n];
    let dense = out.to_dense().to_rows();
    let kernel = field.kernel(&dense, out.cols);
    let cols: Vec<Vec<BigRational>> = if n < top {
        piece.maps[n + 1]
            .columns
            .iter()
            .map(|col| {
                let mut v = vec![BigRational::zero(); out.cols];
                for (i, x) in col {
                    v[*i] = BigRational::from_integer(x.clone());
                }
                v
            })
            .collect()
    } else {
        Vec::new()
    };
    let base_rank = field.dense_rank(&cols);
    for v in kernel {
        let mut with = cols.clone();
        with.push(v.clone());
        if field.dense_rank(&with) > base_rank {
            let terms = v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| {
                    let (t, c) = &piece.bases[n][i];
                    format!("{x}·{t}⊗{{{}}}", r.graph.names_of(*c).join(","))
                })
                .collect();
            return ExactnessWitness {
                m,
                degree: Some(n),
                terms,
            };
        }
    }
    ExactnessWitness {
        m,
        degree: Some(n),
        terms: Vec::new(),
    }
}

/// Checks `d∘d = 0` and exactness in every internal degree `m <= m_max`.
///
/// A failure is an invariant violation whose message carries a witness.
pub fn verify_exactness(
    r: &CliqueResolution,
    m_max: usize,
    limits: &Limits,
) -> Result<Vec<GradedPieceReport>> {
    let (reports, failure) = inspect_exactness(r, m_max, limits)?;
    match failure {
        None => Ok(reports),
        Some(w) => Err(Error::Invariant(format!("resolution is not exact: {w}"))),
    }
}

/// Like [`verify_exactness`] but returns the reports together with the first
/// failure instead of an error.
pub fn inspect_exactness(
    r: &CliqueResolution,
    m_max: usize,
    limits: &Limits,
) -> Result<(Vec<GradedPieceReport>, Option<ExactnessWitness>)> {
    let mut traces = Vec::with_capacity(m_max + 1);
    for len in 0..=m_max {
        traces.push(enumerate_traces(&r.graph, len, limits.enumeration)?);
    }
    let index: Vec<HashMap<Trace, usize>> = traces
        .iter()
        .map(|level| {
            level
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, t)| (t, i))
                .collect()
        })
        .collect();
    let top = r.length();
    let mut reports = Vec::with_capacity(m_max + 1);
    let mut failure = None;
    for m in 0..=m_max {
        let piece = build_piece(r, m, &traces, &index);
        for n in 1..=top {
            let lower = &piece.maps[n - 1];
            if !lower.composes_to_zero(&piece.maps[n]) {
                return Err(Error::Invariant(format!(
                    "d∘d is not zero on C_{n} in internal degree {m}"
                )));
            }
        }
        let dims: Vec<usize> = piece.bases.iter().map(Vec::len).collect();
        let ranks: Vec<usize> = piece.maps.iter().map(|d| r.field.rank(d)).collect();
        let rank_after = |n: usize| if n < top { ranks[n + 1] } else { 0 };
        let mut exact = vec![ranks[0] == piece.augmentation_dim];
        for n in 0..=top {
            exact.push(dims[n] - ranks[n] == rank_after(n));
        }
        let euler = dims
            .iter()
            .enumerate()
            .map(|(n, &d)| if n % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum::<i64>()
            - piece.augmentation_dim as i64;
        if failure.is_none() {
            if !exact[0] {
                failure = Some(ExactnessWitness {
                    m,
                    degree: None,
                    terms: Vec::new(),
                });
            } else if let Some(n) = (0..=top).find(|&n| !exact[n + 1]) {
                failure = Some(witness(r, &piece, m, n));
            }
        }
        reports.push(GradedPieceReport {
            m,
            dims,
            augmentation_dim: piece.augmentation_dim,
            ranks,
            exact,
            euler,
        });
    }
    Ok((reports, failure))
}

/// `dim Extⁿ(k, k)` for `n = 0..=length`.
///
/// Applying `Hom(−, k)` replaces each coefficient trace by its augmentation;
/// every coefficient of `d` is a single letter, so all induced differentials
/// vanish and the dimensions are the clique counts. The vanishing is checked,
/// not assumed.
pub fn ext_dimensions(r: &CliqueResolution) -> Result<Vec<usize>> {
    for n in 1..=r.length() {
        for &c in &r.cliques[n] {
            for (sign, v, face) in r.boundary(c) {
                let coefficient = Trace::letter(&r.graph, v);
                let augmented = if coefficient.is_identity() { sign } else { 0 };
                if augmented != 0 && r.cliques[n - 1].contains(&face) {
                    return Err(Error::Invariant(format!(
                        "dual differential on C_{n} does not vanish at {:?}",
                        r.graph.names_of(c)
                    )));
                }
            }
        }
    }
    Ok(r.term_ranks())
}

/// Exactness bound and outcome embedded in a global dimension report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessSummary {
    pub m_max: usize,
    pub ok: bool,
}

/// Global dimension of `k[M(E,I)]` with the evidence behind it: exactness
/// of a resolution of length ω through internal degree `m_max` bounds the
/// projective dimension of `k` above, and `Ext^ω(k,k) ≠ 0` bounds it below.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GldReport {
    pub field: FieldSpec,
    pub omega: usize,
    pub ext_dims: Vec<usize>,
    pub exactness: ExactnessSummary,
    pub gld: usize,
    #[serde(skip)]
    pub pieces: Vec<GradedPieceReport>,
}

impl GldReport {
    /// Human-readable table of the graded pieces.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let width = self.ext_dims.len();
        out.push_str("  m |");
        for n in 0..width {
            out.push_str(&format!(" dim C_{n:<3}"));
        }
        out.push_str(" | exact\n");
        for p in &self.pieces {
            out.push_str(&format!("{:>3} |", p.m));
            for d in &p.dims {
                out.push_str(&format!(" {d:>8}"));
            }
            out.push_str(&format!(" | {}\n", if p.is_exact() { "yes" } else { "no" }));
        }
        out
    }
}

pub fn global_dimension_report(
    graph: &Arc<IndependenceGraph>,
    field: FieldSpec,
    m_max: usize,
    limits: &Limits,
) -> Result<GldReport> {
    let r = build_resolution(graph, field);
    let pieces = verify_exactness(&r, m_max, limits)?;
    let ext_dims = ext_dimensions(&r)?;
    let omega = r.length();
    let gld = ext_dims
        .iter()
        .rposition(|&d| d != 0)
        .ok_or_else(|| Error::Invariant("Ext^0(k,k) vanishes".into()))?;
    if gld != omega {
        return Err(Error::Invariant(format!(
            "top nonvanishing Ext is {gld}, resolution length is {omega}"
        )));
    }
    Ok(GldReport {
        field,
        omega,
        ext_dims,
        exactness: ExactnessSummary { m_max, ok: true },
        gld,
        pieces,
    })
}
