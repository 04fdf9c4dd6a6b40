//! Seeded random diagrams for property tests and the `lim` command.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use super::diagram::AbDiagram;
use crate::error::{Error, Result};
use crate::fincat::{product_projection, theta, theta_power, FinCat};
use crate::homology::{FGAbGroup, IntMatrix};

const ORDERS: [i64; 6] = [0, 0, 2, 3, 4, 6];

fn random_orders(rng: &mut impl Rng) -> Vec<BigInt> {
    let k = rng.gen_range(1..=2);
    (0..k)
        .map(|_| BigInt::from(*ORDERS.choose(rng).expect("nonempty")))
        .collect()
}

/// A random homomorphism between presented groups.
pub fn random_hom(rng: &mut impl Rng, source: &[BigInt], target: &[BigInt]) -> IntMatrix {
    let mut m = IntMatrix::zeros(target.len(), source.len());
    for (i, d) in target.iter().enumerate() {
        for (j, t) in source.iter().enumerate() {
            m[(i, j)] = match (d.is_zero(), t.is_zero()) {
                (true, true) => BigInt::from(rng.gen_range(-3..=3)),
                (true, false) => BigInt::zero(),
                (false, true) => {
                    BigInt::from(rng.gen_range(0..i64::try_from(d).unwrap_or(i64::MAX)))
                }
                (false, false) => {
                    let g = d.gcd(t);
                    let step = d / &g;
                    let k = i64::try_from(&g).unwrap_or(1);
                    step * BigInt::from(rng.gen_range(0..k))
                }
            };
        }
    }
    m
}

/// Whether every composable pair of nonidentity morphisms is absent, so any
/// choice of homomorphisms is a functor.
pub fn is_free_of_composites(cat: &FinCat) -> bool {
    cat.composable_pairs()
        .all(|(g, f, _)| cat.is_identity(g) || cat.is_identity(f))
}

/// Random values and arbitrary random maps on a category without composable
/// nonidentity pairs, such as Θ.
pub fn random_unconstrained_diagram(base: &Arc<FinCat>, rng: &mut impl Rng) -> Result<AbDiagram> {
    if !is_free_of_composites(base) {
        return Err(Error::Usage(
            "the category has composable nonidentity morphisms".into(),
        ));
    }
    let orders: Vec<Vec<BigInt>> = (0..base.object_count())
        .map(|_| random_orders(rng))
        .collect();
    let maps = (0..base.morphism_count())
        .map(|f| {
            if base.is_identity(f) {
                IntMatrix::identity(orders[base.dom(f)].len())
            } else {
                random_hom(rng, &orders[base.dom(f)], &orders[base.cod(f)])
            }
        })
        .collect();
    AbDiagram::new(base.clone(), orders, maps)
}

/// Whether every hom set has at most one element.
pub fn is_thin(cat: &FinCat) -> bool {
    (0..cat.object_count()).all(|x| (0..cat.object_count()).all(|y| cat.hom(x, y).count() <= 1))
}

/// One cyclic generator per object on a thin category. With weights
/// `u, w` that grow along arrows (products over the objects below), the value
/// at `x` is `Z/(N / gcd(N, u_x))` (or `Z` when `N = 0`) and `x → y` acts by
/// multiplication with `w_y / w_x`.
pub fn random_thin_diagram(base: &Arc<FinCat>, rng: &mut impl Rng) -> Result<AbDiagram> {
    if !is_thin(base) {
        return Err(Error::Usage("the category is not thin".into()));
    }
    let n = base.object_count();
    let q: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let p: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let modulus = BigInt::from(*[0i64, 0, 12, 6, 8].choose(rng).expect("nonempty"));
    let below = |x: usize, weights: &[i64]| -> BigInt {
        (0..n)
            .filter(|&z| base.hom(z, x).next().is_some())
            .map(|z| BigInt::from(weights[z]))
            .product()
    };
    let u: Vec<BigInt> = (0..n).map(|x| below(x, &q)).collect();
    let w: Vec<BigInt> = (0..n).map(|x| below(x, &p)).collect();
    let orders: Vec<Vec<BigInt>> = (0..n)
        .map(|x| {
            if modulus.is_zero() {
                vec![BigInt::zero()]
            } else {
                vec![&modulus / modulus.gcd(&u[x])]
            }
        })
        .collect();
    let maps = base
        .morphisms()
        .iter()
        .map(|m| IntMatrix::from_rows(vec![vec![&w[m.cod] / &w[m.dom]]]))
        .collect();
    AbDiagram::new(base.clone(), orders, maps)
}

/// `Z/m[Hom(c, −)]` (free when `m = 0`), acting by postcomposition.
pub fn representable(base: &Arc<FinCat>, c: usize, modulus: u64) -> Result<AbDiagram> {
    let homs: Vec<Vec<usize>> = (0..base.object_count())
        .map(|x| base.hom(c, x).collect())
        .collect();
    let orders = homs
        .iter()
        .map(|h| vec![BigInt::from(modulus); h.len()])
        .collect();
    let maps = (0..base.morphism_count())
        .map(|f| {
            let (src, tgt) = (&homs[base.dom(f)], &homs[base.cod(f)]);
            let mut m = IntMatrix::zeros(tgt.len(), src.len());
            for (j, &h) in src.iter().enumerate() {
                let image = base.compose(f, h).expect("composable");
                let i = tgt
                    .iter()
                    .position(|&t| t == image)
                    .expect("image lies in the hom set");
                m[(i, j)] = BigInt::from(1);
            }
            m
        })
        .collect();
    AbDiagram::new(base.clone(), orders, maps)
}

/// Direct sum of pullbacks along the projections `Θⁿ → Θ` of random
/// diagrams on Θ, over a random nonempty set of coordinates.
pub fn random_theta_power_diagram(n: usize, rng: &mut impl Rng) -> Result<AbDiagram> {
    let base = Arc::new(theta_power(n)?);
    if n == 0 {
        return Ok(AbDiagram::constant(
            base,
            &FGAbGroup::cyclic(*ORDERS.choose(rng).expect("nonempty")),
        ));
    }
    let t = Arc::new(theta());
    let factors = vec![theta(); n];
    let mut sum: Option<AbDiagram> = None;
    let mut coords: Vec<usize> = (0..n).collect();
    coords.shuffle(rng);
    let take = rng.gen_range(1..=n);
    for &i in &coords[..take] {
        let piece = random_unconstrained_diagram(&t, rng)?;
        let (obj, mor) = product_projection(&factors, i);
        let pulled = piece.pullback(base.clone(), obj, mor)?;
        sum = Some(match sum {
            None => pulled,
            Some(s) => s.direct_sum(&pulled)?,
        });
    }
    Ok(sum.expect("at least one summand"))
}

/// A random diagram on any finite category: unconstrained maps when there
/// are no composites, weighted cyclic values on thin categories, and sums
/// of representables otherwise.
pub fn random_diagram(base: &Arc<FinCat>, rng: &mut impl Rng) -> Result<AbDiagram> {
    if base.object_count() == 0 {
        return AbDiagram::new(base.clone(), Vec::new(), Vec::new());
    }
    let mut d = if is_free_of_composites(base) {
        random_unconstrained_diagram(base, rng)?
    } else if is_thin(base) {
        random_thin_diagram(base, rng)?
    } else {
        let c = rng.gen_range(0..base.object_count());
        representable(base, c, *[0u64, 2, 3].choose(rng).expect("nonempty"))?
    };
    if rng.gen_bool(0.5) {
        let c = rng.gen_range(0..base.object_count());
        d = d.direct_sum(&representable(
            base,
            c,
            *[0u64, 2, 6].choose(rng).expect("nonempty"),
        )?)?;
    }
    Ok(d)
}

/// A random finite poset on `n` elements: `i ≤ j` is drawn for `i < j` and
/// closed under transitivity.
pub fn random_poset(n: usize, density: f64, rng: &mut impl Rng) -> Result<FinCat> {
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
        for cell in row.iter_mut().skip(i + 1) {
            *cell = rng.gen_bool(density);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    FinCat::poset((0..n).map(|i| format!("p{i}")).collect(), |i, j| leq[i][j])
}
