use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::diagram::{reduce, AbDiagram};
use super::subquotient::subquotient;
use crate::error::{Error, Result};
use crate::fincat::ChainLevels;
use crate::homology::{FGAbGroup, SparseMatrix};
use crate::limits::Limits;

/// `Cⁿ(C, F) = ∏ F(cₙ)` over chains `c₀ → … → cₙ`, with
/// `(δφ)(c₀ → … → c_{n+1}) = Σ_{i≤n} (−1)^i φ(dᵢ) + (−1)^{n+1} F(α_{n+1}) φ(d_{n+1})`.
///
/// The normalized variant indexes only chains of nonidentity arrows.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    normalized: bool,
    chain_counts: Vec<usize>,
    orders: Vec<Vec<BigInt>>,
    coboundaries: Vec<SparseMatrix>,
    exhaustive: bool,
}

/// Cochains in degrees `0..=n_max + 1`, enough for `lim⁰ … lim^{n_max}`.
pub fn cochain_complex(
    f: &AbDiagram,
    n_max: usize,
    normalized: bool,
    limits: &Limits,
) -> Result<CochainComplex> {
    let base = f.base();
    if normalized && base.has_nonidentity_retraction() {
        return Err(Error::Usage(
            "the normalized cochain complex needs a category without nonidentity retractions"
                .into(),
        ));
    }
    let levels = ChainLevels::new(base, n_max + 1, normalized, limits)?;
    let mut orders = Vec::with_capacity(levels.levels.len());
    let mut offsets = Vec::with_capacity(levels.levels.len());
    for level in &levels.levels {
        let mut o = Vec::new();
        let mut off = Vec::with_capacity(level.len());
        for ch in level {
            off.push(o.len());
            o.extend_from_slice(f.orders(ch.end(base)));
            if o.len() > limits.max_simplices {
                return Err(Error::budget(
                    "cochain generators",
                    o.len() as u128,
                    limits.max_simplices as u128,
                ));
            }
        }
        orders.push(o);
        offsets.push(off);
    }
    let mut coboundaries = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut triplets = Vec::new();
        for (k, tau) in levels.levels[n + 1].iter().enumerate() {
            let row0 = offsets[n + 1][k];
            for i in 0..=n + 1 {
                let Some(sigma) = tau.face(base, i, normalized) else {
                    continue;
                };
                let p = levels.position(&sigma).ok_or_else(|| {
                    Error::Invariant("cochain face outside the enumerated chains".into())
                })?;
                let col0 = offsets[n][p];
                let sign = BigInt::from(if i % 2 == 0 { 1 } else { -1 });
                if i <= n {
                    for j in 0..f.orders(sigma.end(base)).len() {
                        triplets.push((row0 + j, col0 + j, sign.clone()));
                    }
                } else {
                    let m = f.map(*tau.arrows.last().expect("positive length"));
                    for r in 0..m.rows() {
                        for c in 0..m.cols() {
                            if !m[(r, c)].is_zero() {
                                triplets.push((row0 + r, col0 + c, &sign * &m[(r, c)]));
                            }
                        }
                    }
                }
            }
        }
        let mut d = SparseMatrix::from_triplets(orders[n + 1].len(), orders[n].len(), triplets);
        for col in &mut d.columns {
            for (r, v) in col.iter_mut() {
                *v = reduce(v, &orders[n + 1][*r]);
            }
            col.retain(|(_, v)| !v.is_zero());
        }
        coboundaries.push(d);
    }
    let cx = CochainComplex {
        normalized,
        chain_counts: levels.sizes(),
        exhaustive: normalized && levels.levels[n_max + 1].is_empty(),
        orders,
        coboundaries,
    };
    cx.check_square_zero()?;
    Ok(cx)
}

impl CochainComplex {
    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Number of indexing chains per degree.
    pub fn chain_counts(&self) -> &[usize] {
        &self.chain_counts
    }

    pub fn top(&self) -> usize {
        self.chain_counts.len() - 1
    }

    /// Whether every cochain group above the top degree vanishes.
    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    pub fn valid_through(&self) -> usize {
        self.top() - 1
    }

    /// `Cⁿ` as an abstract group.
    pub fn degree_group(&self, n: usize) -> FGAbGroup {
        FGAbGroup::from_cyclic_orders(self.orders[n].iter().cloned())
    }

    /// Generator orders of `Cⁿ`.
    pub fn generator_orders(&self, n: usize) -> &[BigInt] {
        &self.orders[n]
    }

    /// `δⁿ: Cⁿ → Cⁿ⁺¹`, for `n < top`.
    pub fn coboundary(&self, n: usize) -> &SparseMatrix {
        &self.coboundaries[n]
    }

    /// `δⁿ⁺¹ ∘ δⁿ = 0` modulo the relations of `Cⁿ⁺²`.
    pub fn check_square_zero(&self) -> Result<()> {
        for n in 0..self.coboundaries.len().saturating_sub(1) {
            let product = self.coboundaries[n + 1].mul(&self.coboundaries[n]);
            let target = &self.orders[n + 2];
            let ok = product
                .columns
                .iter()
                .all(|col| col.iter().all(|(r, v)| reduce(v, &target[*r]).is_zero()));
            if !ok {
                return Err(Error::Invariant(format!("δ^{} ∘ δ^{n} is not zero", n + 1)));
            }
        }
        Ok(())
    }

    /// `limⁿ = ker δⁿ / im δⁿ⁻¹`.
    pub fn lim(&self, n: usize) -> Result<FGAbGroup> {
        if n > self.valid_through() {
            if self.exhaustive {
                return Ok(FGAbGroup::zero());
            }
            return Err(Error::Range(format!(
                "lim^{n} requested, the complex is only valid through degree {}",
                self.valid_through()
            )));
        }
        let d = self.coboundaries[n].to_dense();
        let e = (n > 0).then(|| self.coboundaries[n - 1].to_dense());
        subquotient(&d, &self.orders[n + 1], e.as_ref(), &self.orders[n])
    }

    /// `lim⁰ … lim^{valid_through}`.
    pub fn lims(&self) -> Result<Vec<FGAbGroup>> {
        (0..=self.valid_through()).map(|n| self.lim(n)).collect()
    }
}

/// `limⁿ F`, through the normalized complex when the base category allows it.
pub fn lim_n(f: &AbDiagram, n: usize, limits: &Limits) -> Result<FGAbGroup> {
    let normalized = !f.base().has_nonidentity_retraction();
    cochain_complex(f, n, normalized, limits)?.lim(n)
}

/// Derived limits computed from both the full and the normalized complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationReport {
    pub n_max: usize,
    pub full: Vec<FGAbGroup>,
    pub normalized: Vec<FGAbGroup>,
}

/// Checks that both complexes give isomorphic `limⁿ` for `n <= n_max`.
pub fn normalization_agreement(
    f: &AbDiagram,
    n_max: usize,
    limits: &Limits,
) -> Result<NormalizationReport> {
    let full = cochain_complex(f, n_max, false, limits)?.lims()?;
    let normalized = cochain_complex(f, n_max, true, limits)?.lims()?;
    if let Some(n) = (0..=n_max).find(|&n| full[n] != normalized[n]) {
        return Err(Error::Invariant(format!(
            "lim^{n} differs: {} from the full complex, {} from the normalized one",
            full[n], normalized[n]
        )));
    }
    Ok(NormalizationReport {
        n_max,
        full,
        normalized,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fincat::{point, theta, theta_power};

    #[test]
    fn constant_on_theta() {
        let t = Arc::new(theta());
        let f = AbDiagram::constant(t, &FGAbGroup::free(1));
        let cx = cochain_complex(&f, 2, true, &Limits::default()).unwrap();
        assert_eq!(&cx.chain_counts()[..3], &[2, 2, 0]);
        assert_eq!(
            cx.lims().unwrap(),
            vec![FGAbGroup::free(1), FGAbGroup::free(1), FGAbGroup::zero()]
        );
    }

    #[test]
    fn constant_on_point() {
        let f = AbDiagram::constant(Arc::new(point()), &FGAbGroup::cyclic(5));
        let cx = cochain_complex(&f, 1, true, &Limits::default()).unwrap();
        assert_eq!(cx.chain_counts(), &[1, 0, 0]);
        assert_eq!(cx.lim(0).unwrap(), FGAbGroup::cyclic(5));
    }

    #[test]
    fn torus_with_torsion_coefficients() {
        let f = AbDiagram::constant(Arc::new(theta_power(2).unwrap()), &FGAbGroup::cyclic(6));
        let report = normalization_agreement(&f, 2, &Limits::default()).unwrap();
        let z6 = FGAbGroup::cyclic(6);
        assert_eq!(report.normalized, vec![z6.clone(), z6.direct_sum(&z6), z6]);
    }

    #[test]
    fn truncation_is_enforced() {
        let f = AbDiagram::constant(Arc::new(theta()), &FGAbGroup::free(1));
        let cx = cochain_complex(&f, 1, false, &Limits::default()).unwrap();
        assert!(matches!(cx.lim(2), Err(Error::Range(_))));
    }
}
