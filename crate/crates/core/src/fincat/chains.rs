//! Composable chains `c₀ → c₁ → … → cₙ`, the simplices of the nerve.

use std::collections::HashMap;

use super::FinCat;
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, cat: &FinCat) -> usize {
        self.arrows.last().map_or(self.start, |&a| cat.cod(a))
    }

    /// The `i`-th face: `d₀` drops `c₀`, `dₙ` drops `cₙ`, inner faces compose
    /// `α_{i+1}∘α_i`. With `nondegenerate`, faces whose composite is an
    /// identity are reported as `None`.
    pub fn face(&self, cat: &FinCat, i: usize, nondegenerate: bool) -> Option<Chain> {
        let n = self.arrows.len();
        assert!(i <= n && n > 0, "face index out of range");
        if i == 0 {
            Some(Chain {
                start: cat.cod(self.arrows[0]),
                arrows: self.arrows[1..].to_vec(),
            })
        } else if i == n {
            Some(Chain {
                start: self.start,
                arrows: self.arrows[..n - 1].to_vec(),
            })
        } else {
            let c = cat
                .compose(self.arrows[i], self.arrows[i - 1])
                .expect("consecutive arrows compose");
            if nondegenerate && cat.is_identity(c) {
                return None;
            }
            let mut arrows = Vec::with_capacity(n - 1);
            arrows.extend_from_slice(&self.arrows[..i - 1]);
            arrows.push(c);
            arrows.extend_from_slice(&self.arrows[i + 1..]);
            Some(Chain {
                start: self.start,
                arrows,
            })
        }
    }
}

/// The chains of each length `0..=top` in canonical order, together with a
/// lookup from chain to position.
#[derive(Clone, Debug)]
pub struct ChainLevels {
    pub nondegenerate: bool,
    pub levels: Vec<Vec<Chain>>,
    index: Vec<HashMap<Chain, usize>>,
}

impl ChainLevels {
    /// With `nondegenerate`, only chains of nonidentity arrows are listed.
    pub fn new(cat: &FinCat, top: usize, nondegenerate: bool, limits: &Limits) -> Result<Self> {
        let mut levels: Vec<Vec<Chain>> = vec![(0..cat.object_count())
            .map(|x| Chain {
                start: x,
                arrows: Vec::new(),
            })
            .collect()];
        for n in 1..=top {
            let prev = &levels[n - 1];
            let mut next = Vec::new();
            for ch in prev {
                for &a in cat.outgoing(ch.end(cat)) {
                    if nondegenerate && cat.is_identity(a) {
                        continue;
                    }
                    let mut arrows = ch.arrows.clone();
                    arrows.push(a);
                    next.push(Chain {
                        start: ch.start,
                        arrows,
                    });
                    if next.len() > limits.max_simplices {
                        return Err(Error::budget(
                            format!("chains of length {n}"),
                            next.len() as u128,
                            limits.max_simplices as u128,
                        ));
                    }
                }
            }
            levels.push(next);
        }
        let index = levels
            .iter()
            .map(|l| l.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect())
            .collect();
        Ok(ChainLevels {
            nondegenerate,
            levels,
            index,
        })
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn position(&self, chain: &Chain) -> Option<usize> {
        self.index.get(chain.len())?.get(chain).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{theta, theta_power};

    #[test]
    fn theta_chain_counts() {
        let l = ChainLevels::new(&theta(), 3, true, &Limits::default()).unwrap();
        assert_eq!(l.sizes(), vec![2, 2, 0, 0]);
        let full = ChainLevels::new(&theta(), 2, false, &Limits::default()).unwrap();
        assert_eq!(full.sizes(), vec![2, 4, 6]);
    }

    #[test]
    fn theta_squared_counts() {
        let l = ChainLevels::new(&theta_power(2).unwrap(), 3, true, &Limits::default()).unwrap();
        assert_eq!(l.sizes(), vec![4, 12, 8, 0]);
    }

    #[test]
    fn faces() {
        let t = theta_power(2).unwrap();
        let l = ChainLevels::new(&t, 2, true, &Limits::default()).unwrap();
        for ch in &l.levels[2] {
            for i in 0..=2 {
                let f = ch.face(&t, i, true).unwrap();
                assert!(l.position(&f).is_some());
            }
        }
    }
}
