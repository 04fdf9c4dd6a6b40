use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fincat::{FinCat, Functor};
use crate::homology::{FGAbGroup, IntMatrix};

/// A functor from a finite category to finitely generated abelian groups.
///
/// Each value is presented by generators of given orders (0 for a free
/// generator). A morphism acts by an integer matrix whose column `j` is the
/// image of source generator `j` in target generators; entries in rows of
/// finite order `d` are kept reduced into `0..d`.
#[derive(Clone, Debug)]
pub struct AbDiagram {
    base: Arc<FinCat>,
    orders: Vec<Vec<BigInt>>,
    maps: Vec<IntMatrix>,
}

pub(crate) fn reduce(v: &BigInt, order: &BigInt) -> BigInt {
    if order.is_zero() {
        v.clone()
    } else {
        v.mod_floor(order)
    }
}

fn reduce_rows(m: &IntMatrix, orders: &[BigInt]) -> IntMatrix {
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(i, j)] = reduce(&m[(i, j)], &orders[i]);
        }
    }
    out
}

impl AbDiagram {
    /// Validates shapes, orders, identities and functoriality.
    pub fn new(base: Arc<FinCat>, orders: Vec<Vec<BigInt>>, maps: Vec<IntMatrix>) -> Result<Self> {
        if orders.len() != base.object_count() {
            return Err(Error::Input(format!(
                "diagram has {} values for {} objects",
                orders.len(),
                base.object_count()
            )));
        }
        if maps.len() != base.morphism_count() {
            return Err(Error::Input(format!(
                "diagram has {} maps for {} morphisms",
                maps.len(),
                base.morphism_count()
            )));
        }
        if orders.iter().flatten().any(|o| o < &BigInt::zero()) {
            return Err(Error::Input("generator orders must be nonnegative".into()));
        }
        let mut reduced = Vec::with_capacity(maps.len());
        for (f, m) in maps.iter().enumerate() {
            let name = &base.morphism(f).name;
            let (src, tgt) = (&orders[base.dom(f)], &orders[base.cod(f)]);
            if m.rows() != tgt.len() || m.cols() != src.len() {
                return Err(Error::Input(format!(
                    "map of `{name}` is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    tgt.len(),
                    src.len()
                )));
            }
            for (j, t) in src.iter().enumerate() {
                if t.is_zero() {
                    continue;
                }
                for (i, d) in tgt.iter().enumerate() {
                    if !reduce(&(&m[(i, j)] * t), d).is_zero() {
                        return Err(Error::Input(format!(
                            "map of `{name}` sends generator {j} of order {t} to an element of larger order"
                        )));
                    }
                }
            }
            reduced.push(reduce_rows(m, tgt));
        }
        for x in 0..base.object_count() {
            let id = base.identity(x);
            if reduced[id] != reduce_rows(&IntMatrix::identity(orders[x].len()), &orders[x]) {
                return Err(Error::Input(format!(
                    "identity `{}` is not sent to the identity",
                    base.morphism(id).name
                )));
            }
        }
        for (g, f, h) in base.composable_pairs() {
            if base.is_identity(g) || base.is_identity(f) {
                continue;
            }
            let product = reduced[g]
                .mul(&reduced[f])
                .expect("BigInt arithmetic does not overflow");
            if reduce_rows(&product, &orders[base.cod(g)]) != reduced[h] {
                return Err(Error::Input(format!(
                    "functoriality fails for the composable pair ({}, {})",
                    base.morphism(g).name,
                    base.morphism(f).name
                )));
            }
        }
        Ok(AbDiagram {
            base,
            orders,
            maps: reduced,
        })
    }

    /// Values given as groups in canonical form; generators are ordered
    /// torsion first, then free.
    pub fn from_groups(
        base: Arc<FinCat>,
        groups: &[FGAbGroup],
        maps: Vec<IntMatrix>,
    ) -> Result<Self> {
        AbDiagram::new(
            base,
            groups.iter().map(FGAbGroup::generator_orders).collect(),
            maps,
        )
    }

    /// `ΔA`: every object to `a`, every morphism to the identity.
    pub fn constant(base: Arc<FinCat>, a: &FGAbGroup) -> Self {
        let orders = a.generator_orders();
        let id = IntMatrix::identity(orders.len());
        let maps = vec![id; base.morphism_count()];
        AbDiagram {
            orders: vec![orders; base.object_count()],
            maps,
            base,
        }
    }

    /// `F ∘ S` for a functor `S` into the base, given by its object and
    /// morphism maps.
    pub fn pullback(
        &self,
        source: Arc<FinCat>,
        obj_map: Vec<usize>,
        mor_map: Vec<usize>,
    ) -> Result<Self> {
        Functor::new(&source, &self.base, obj_map.clone(), mor_map.clone())?;
        let orders = obj_map.iter().map(|&x| self.orders[x].clone()).collect();
        let maps = mor_map.iter().map(|&f| self.maps[f].clone()).collect();
        Ok(AbDiagram {
            base: source,
            orders,
            maps,
        })
    }

    pub fn direct_sum(&self, other: &AbDiagram) -> Result<Self> {
        if !Arc::ptr_eq(&self.base, &other.base) {
            return Err(Error::Usage(
                "direct sum of diagrams over different categories".into(),
            ));
        }
        let orders = self
            .orders
            .iter()
            .zip(&other.orders)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| {
                let mut m = IntMatrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
                for i in 0..a.rows() {
                    for j in 0..a.cols() {
                        m[(i, j)] = a[(i, j)].clone();
                    }
                }
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        m[(a.rows() + i, a.cols() + j)] = b[(i, j)].clone();
                    }
                }
                m
            })
            .collect();
        Ok(AbDiagram {
            base: self.base.clone(),
            orders,
            maps,
        })
    }

    pub fn base(&self) -> &Arc<FinCat> {
        &self.base
    }

    /// Generator orders of the value at `x`.
    pub fn orders(&self, x: usize) -> &[BigInt] {
        &self.orders[x]
    }

    pub fn group(&self, x: usize) -> FGAbGroup {
        FGAbGroup::from_cyclic_orders(self.orders[x].iter().cloned())
    }

    pub fn map(&self, f: usize) -> &IntMatrix {
        &self.maps[f]
    }

    pub fn is_zero(&self) -> bool {
        (0..self.base.object_count()).all(|x| self.group(x).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::theta;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn rejects_order_violations() {
        let t = Arc::new(theta());
        // Z/2 at a, Z at b: any nonzero map Z/2 → Z is impossible
        let maps = vec![
            IntMatrix::from_i64_rows(&[vec![1]]),
            IntMatrix::from_i64_rows(&[vec![1]]),
            IntMatrix::from_i64_rows(&[vec![1]]),
            IntMatrix::from_i64_rows(&[vec![0]]),
        ];
        let err = AbDiagram::new(t, vec![vec![b(2)], vec![b(0)]], maps).unwrap_err();
        assert!(err.to_string().contains("alpha1"), "{err}");
    }

    #[test]
    fn constant_and_sum() {
        let t = Arc::new(theta());
        let d = AbDiagram::constant(t.clone(), &FGAbGroup::cyclic(6));
        let s = d
            .direct_sum(&AbDiagram::constant(t, &FGAbGroup::free(1)))
            .unwrap();
        assert_eq!(s.group(0), FGAbGroup::new(1, [b(6)]));
        assert_eq!(s.map(2).rows(), 2);
    }
}
