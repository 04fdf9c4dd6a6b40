//! Homology of the nerve of a finite category.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::chain::{homology, HomologyResult, IntChainComplex};
use super::group::FGAbGroup;
use super::matrix::SparseMatrix;
use crate::error::{Error, Result};
use crate::fincat::{ChainLevels, FinCat};
use crate::limits::Limits;

/// Normalized chain complex of the nerve in degrees `0..=k+1`.
///
/// Degree `n` has a basis of the chains of `n` nonidentity arrows; faces
/// whose inner composite is an identity are degenerate and dropped.
pub fn nerve_complex(c: &FinCat, k: usize, limits: &Limits) -> Result<IntChainComplex> {
    let levels = ChainLevels::new(c, k + 1, true, limits)?;
    let sizes = levels.sizes();
    let mut differentials = Vec::with_capacity(k + 1);
    for n in 1..=k + 1 {
        let mut d = SparseMatrix::zeros(sizes[n - 1], 0);
        for ch in &levels.levels[n] {
            let mut col = Vec::with_capacity(n + 1);
            for i in 0..=n {
                if let Some(face) = ch.face(c, i, true) {
                    let row = levels.position(&face).ok_or_else(|| {
                        Error::Invariant("nerve face outside the enumerated chains".into())
                    })?;
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    col.push((row, BigInt::from(sign)));
                }
            }
            d.push_column(col);
        }
        differentials.push(d);
    }
    let exhaustive = sizes[k + 1] == 0;
    IntChainComplex::new(sizes, differentials, exhaustive)
}

/// Integral homology of the nerve through degree `k`.
pub fn nerve_homology(c: &FinCat, k: usize, limits: &Limits) -> Result<HomologyResult> {
    homology(&nerve_complex(c, k, limits)?)
}

/// Outcome of an acyclicity test together with the evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcyclicityCertificate {
    pub acyclic: bool,
    /// `H_0 … H_{checked_through}`.
    pub groups: Vec<FGAbGroup>,
    pub checked_through: usize,
    /// True when the nerve has no nondegenerate simplices past the checked
    /// range, so the verdict holds in every degree.
    pub exhaustive: bool,
}

/// Whether `H_0 = Z` and `H_i = 0` for `1 <= i <= k_max`.
pub fn is_acyclic(c: &FinCat, k_max: usize, limits: &Limits) -> Result<AcyclicityCertificate> {
    let h = nerve_homology(c, k_max, limits)?;
    let groups: Vec<FGAbGroup> = (0..=k_max).map(|n| h.group(n)).collect::<Result<_>>()?;
    let acyclic = groups[0] == FGAbGroup::free(1) && groups[1..].iter().all(FGAbGroup::is_zero);
    Ok(AcyclicityCertificate {
        acyclic,
        groups,
        checked_through: k_max,
        exhaustive: h.exhaustive,
    })
}

/// `H^n(C; A) ≅ Ext(H_{n-1}, A) ⊕ Hom(H_n, A)`.
pub fn cohomology_constant(
    c: &FinCat,
    a: &FGAbGroup,
    n: usize,
    limits: &Limits,
) -> Result<FGAbGroup> {
    let h = nerve_homology(c, n, limits)?;
    cohomology_from_homology(&h, a, n)
}

/// Universal coefficients applied to already computed homology.
pub fn cohomology_from_homology(h: &HomologyResult, a: &FGAbGroup, n: usize) -> Result<FGAbGroup> {
    let hom = h.group(n)?.hom_to(a);
    if n == 0 {
        return Ok(hom);
    }
    Ok(h.group(n - 1)?.ext_to(a).direct_sum(&hom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{point, theta, theta_power};

    #[test]
    fn theta_is_a_circle() {
        let h = nerve_homology(&theta(), 2, &Limits::default()).unwrap();
        assert_eq!(h.groups[..2], [FGAbGroup::free(1), FGAbGroup::free(1)]);
        assert!(h.exhaustive);
    }

    #[test]
    fn nerve_sizes() {
        let l = Limits::default();
        assert_eq!(
            nerve_complex(&theta(), 2, &l).unwrap().sizes(),
            &[2, 2, 0, 0]
        );
        assert_eq!(
            nerve_complex(&theta_power(2).unwrap(), 3, &l)
                .unwrap()
                .sizes(),
            &[4, 12, 8, 0, 0]
        );
        assert_eq!(nerve_complex(&point(), 1, &l).unwrap().sizes(), &[1, 0, 0]);
    }

    #[test]
    fn universal_coefficients_on_the_torus() {
        let l = Limits::default();
        let t2 = theta_power(2).unwrap();
        assert_eq!(
            cohomology_constant(&t2, &FGAbGroup::cyclic(4), 2, &l).unwrap(),
            FGAbGroup::cyclic(4)
        );
        assert_eq!(
            cohomology_constant(&t2, &FGAbGroup::free(1), 1, &l).unwrap(),
            FGAbGroup::free(2)
        );
        assert_eq!(
            cohomology_constant(&theta(), &FGAbGroup::free(1), 0, &l).unwrap(),
            FGAbGroup::free(1)
        );
    }

    #[test]
    fn empty_category_is_not_acyclic() {
        let empty = FinCat::poset(Vec::new(), |_, _| true).unwrap();
        let cert = is_acyclic(&empty, 2, &Limits::default()).unwrap();
        assert!(!cert.acyclic);
        assert!(cert.groups[0].is_zero());
    }
}
