use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A finitely generated abelian group `Z^rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_k` with
/// `1 < t₁ | t₂ | … | t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FGAbGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FGAbGroup {
    /// Normalizes arbitrary positive cyclic orders into invariant factors.
    pub fn new(rank: usize, orders: impl IntoIterator<Item = BigInt>) -> Self {
        let mut t: Vec<BigInt> = orders
            .into_iter()
            .map(|x| if x < BigInt::zero() { -x } else { x })
            .collect();
        assert!(
            t.iter().all(|x| !x.is_zero()),
            "torsion orders must be nonzero"
        );
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let g = t[i].gcd(&t[j]);
                let l = &t[i] / &g * &t[j];
                t[i] = g;
                t[j] = l;
            }
        }
        t.retain(|x| !x.is_one());
        FGAbGroup { rank, torsion: t }
    }

    pub fn zero() -> Self {
        FGAbGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        FGAbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/n`, where `n = 0` gives `Z`.
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        FGAbGroup::from_cyclic_orders([n.into()])
    }

    /// Direct sum of cyclic groups, where order 0 means `Z`.
    pub fn from_cyclic_orders(orders: impl IntoIterator<Item = BigInt>) -> Self {
        let (free, finite): (Vec<BigInt>, Vec<BigInt>) =
            orders.into_iter().partition(Zero::is_zero);
        FGAbGroup::new(free.len(), finite)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of a finite group.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Orders of a canonical generating set: torsion generators first, then
    /// free ones (order 0).
    pub fn generator_orders(&self) -> Vec<BigInt> {
        self.torsion
            .iter()
            .cloned()
            .chain(std::iter::repeat_n(BigInt::zero(), self.rank))
            .collect()
    }

    pub fn direct_sum(&self, other: &FGAbGroup) -> FGAbGroup {
        FGAbGroup::new(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    /// `Hom(self, a)`.
    pub fn hom_to(&self, a: &FGAbGroup) -> FGAbGroup {
        let mut out = FGAbGroup::zero();
        for _ in 0..self.rank {
            out = out.direct_sum(a);
        }
        for m in &self.torsion {
            let orders = a.torsion.iter().map(|d| m.gcd(d));
            out = out.direct_sum(&FGAbGroup::new(0, orders));
        }
        out
    }

    /// `Ext(self, a)`.
    pub fn ext_to(&self, a: &FGAbGroup) -> FGAbGroup {
        let mut orders = Vec::new();
        for m in &self.torsion {
            orders.extend(std::iter::repeat_n(m.clone(), a.rank));
            orders.extend(a.torsion.iter().map(|d| m.gcd(d)));
        }
        FGAbGroup::new(0, orders)
    }
}

impl fmt::Display for FGAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    rank: usize,
    torsion: Vec<serde_json::Number>,
}

impl Serialize for FGAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let torsion = self
            .torsion
            .iter()
            .map(|t| {
                t.to_string()
                    .parse::<serde_json::Number>()
                    .map_err(serde::ser::Error::custom)
            })
            .collect::<Result<_, _>>()?;
        GroupRepr {
            rank: self.rank,
            torsion,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FGAbGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = GroupRepr::deserialize(d)?;
        let torsion = repr
            .torsion
            .iter()
            .map(|n| n.to_string().parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        if torsion.iter().any(|t| t <= &BigInt::zero()) {
            return Err(D::Error::custom("torsion orders must be positive"));
        }
        Ok(FGAbGroup::new(repr.rank, torsion))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn normalizes_to_invariant_factors() {
        let g = FGAbGroup::new(1, [b(4), b(6), b(1)]);
        assert_eq!(g.torsion(), &[b(2), b(12)]);
        assert_eq!(g.to_string(), "Z + Z/2 + Z/12");
        assert_eq!(FGAbGroup::cyclic(0), FGAbGroup::free(1));
        assert!(FGAbGroup::cyclic(1).is_zero());
    }

    #[test]
    fn hom_and_ext() {
        let z = FGAbGroup::free(1);
        let z2 = FGAbGroup::cyclic(2);
        let z6 = FGAbGroup::cyclic(6);
        assert_eq!(z.hom_to(&z6), z6);
        assert_eq!(z2.hom_to(&z), FGAbGroup::zero());
        assert_eq!(z2.hom_to(&z6), z2);
        assert_eq!(z2.ext_to(&z), z2);
        assert_eq!(z6.ext_to(&FGAbGroup::cyclic(4)), z2);
        assert_eq!(z.ext_to(&z2), FGAbGroup::zero());
    }

    #[test]
    fn json_uses_plain_numbers() {
        let g = FGAbGroup::new(2, [b(3)]);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"rank":2,"torsion":[3]}"#);
        assert_eq!(serde_json::from_str::<FGAbGroup>(&text).unwrap(), g);
    }
}
