use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::group::FGAbGroup;
use super::matrix::SparseMatrix;
use super::snf::sparse_invariant_factors;
use crate::error::{Error, Result};

/// A bounded complex of free abelian groups `C_top → … → C_1 → C_0`.
///
/// `exhaustive` records that every `C_n` above `top` is zero, so the top
/// degree is exact too; otherwise the top degree only serves to compute the
/// degree below it.
#[derive(Clone, Debug)]
pub struct IntChainComplex {
    sizes: Vec<usize>,
    differentials: Vec<SparseMatrix>,
    exhaustive: bool,
}

impl IntChainComplex {
    /// `differentials[n - 1]` is `d_n: C_n → C_{n-1}`.
    pub fn new(
        sizes: Vec<usize>,
        differentials: Vec<SparseMatrix>,
        exhaustive: bool,
    ) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::Usage("a chain complex needs degree 0".into()));
        }
        if !exhaustive && sizes.len() < 2 {
            return Err(Error::Usage(
                "a truncated chain complex needs at least two degrees".into(),
            ));
        }
        if differentials.len() + 1 != sizes.len() {
            return Err(Error::Usage(format!(
                "{} degrees need {} differentials, got {}",
                sizes.len(),
                sizes.len() - 1,
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.rows != sizes[i] || d.cols != sizes[i + 1] {
                return Err(Error::Usage(format!(
                    "d_{} is {}x{}, expected {}x{}",
                    i + 1,
                    d.rows,
                    d.cols,
                    sizes[i],
                    sizes[i + 1]
                )));
            }
        }
        Ok(IntChainComplex {
            sizes,
            differentials,
            exhaustive,
        })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn top(&self) -> usize {
        self.sizes.len() - 1
    }

    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    /// `d_n`, for `1 <= n <= top`.
    pub fn differential(&self, n: usize) -> &SparseMatrix {
        &self.differentials[n - 1]
    }

    /// Highest degree whose homology the truncation determines.
    pub fn valid_through(&self) -> usize {
        if self.exhaustive {
            self.top()
        } else {
            self.top() - 1
        }
    }

    /// Checks `d_n ∘ d_{n+1} = 0` for every stored pair.
    pub fn check_square_zero(&self) -> Result<()> {
        for n in 1..self.top() {
            if !self
                .differential(n)
                .composes_to_zero(self.differential(n + 1))
            {
                return Err(Error::Invariant(format!("d_{n} ∘ d_{} is not zero", n + 1)));
            }
        }
        Ok(())
    }
}

/// Homology groups `H_0 … H_{valid_through}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub groups: Vec<FGAbGroup>,
    pub valid_through: usize,
    /// Whether every degree above `valid_through` is known to vanish.
    pub exhaustive: bool,
}

impl HomologyResult {
    /// `H_n`, or a range error past the truncation.
    pub fn group(&self, n: usize) -> Result<FGAbGroup> {
        if let Some(g) = self.groups.get(n) {
            Ok(g.clone())
        } else if self.exhaustive {
            Ok(FGAbGroup::zero())
        } else {
            Err(Error::Range(format!(
                "H_{n} requested, homology is only valid through degree {}",
                self.valid_through
            )))
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.groups.iter().map(FGAbGroup::rank).collect()
    }
}

/// `H_n = ker d_n / im d_{n+1}`, read off the invariant factors of each
/// differential.
pub fn homology(cx: &IntChainComplex) -> Result<HomologyResult> {
    cx.check_square_zero()?;
    let top = cx.top();
    let factors: Vec<Vec<BigInt>> = (1..=top)
        .map(|n| sparse_invariant_factors(cx.differential(n)))
        .collect();
    let rank_of = |n: usize| -> usize {
        if n == 0 || n > top {
            0
        } else {
            factors[n - 1].len()
        }
    };
    let valid = cx.valid_through();
    let groups = (0..=valid)
        .map(|n| {
            let free = cx.sizes[n] - rank_of(n) - rank_of(n + 1);
            let torsion = if n < top {
                factors[n].clone()
            } else {
                Vec::new()
            };
            FGAbGroup::new(free, torsion)
        })
        .collect();
    Ok(HomologyResult {
        groups,
        valid_through: valid,
        exhaustive: cx.exhaustive,
    })
}
