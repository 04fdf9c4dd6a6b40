use std::collections::HashMap;

use super::{FinCat, Morphism};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// One object, one morphism.
pub fn point() -> FinCat {
    FinCat::from_fn(
        vec!["*".into()],
        vec![Morphism {
            name: "1_*".into(),
            dom: 0,
            cod: 0,
        }],
        vec![0],
        &Limits::default(),
        |_, _| Ok(0),
    )
    .expect("point category is valid")
}

/// Θ: objects `a`, `b` and two parallel arrows `alpha1`, `alpha2: a → b`.
pub fn theta() -> FinCat {
    let morphisms = vec![
        Morphism {
            name: "1_a".into(),
            dom: 0,
            cod: 0,
        },
        Morphism {
            name: "1_b".into(),
            dom: 1,
            cod: 1,
        },
        Morphism {
            name: "alpha1".into(),
            dom: 0,
            cod: 1,
        },
        Morphism {
            name: "alpha2".into(),
            dom: 0,
            cod: 1,
        },
    ];
    FinCat::from_fn(
        vec!["a".into(), "b".into()],
        morphisms,
        vec![0, 1],
        &Limits::default(),
        |g, f| Ok(if g <= 1 { f } else { g }),
    )
    .expect("theta is a valid category")
}

/// Θⁿ; `theta_power(0)` is the point.
pub fn theta_power(n: usize) -> Result<FinCat> {
    if n == 0 {
        return Ok(point());
    }
    product(&vec![theta(); n], &Limits::default())
}

fn tuple_name<'a>(parts: impl Iterator<Item = &'a str>) -> String {
    format!("({})", parts.collect::<Vec<_>>().join(","))
}

/// Product category with componentwise composition. A single factor is
/// returned unchanged.
pub fn product(cats: &[FinCat], limits: &Limits) -> Result<FinCat> {
    match cats {
        [] => {
            return Err(Error::Usage(
                "product of an empty list of categories".into(),
            ))
        }
        [only] => return Ok(only.clone()),
        _ => {}
    }
    let objects_needed = cats
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.object_count() as u128));
    let morphisms_needed = cats.iter().fold(1u128, |acc, c| {
        acc.saturating_mul(c.morphism_count() as u128)
    });
    if morphisms_needed > limits.max_morphisms as u128 {
        return Err(Error::budget(
            "product morphisms",
            morphisms_needed,
            limits.max_morphisms as u128,
        ));
    }
    let obj_radix: Vec<usize> = cats.iter().map(FinCat::object_count).collect();
    let mor_radix: Vec<usize> = cats.iter().map(FinCat::morphism_count).collect();
    let obj_tuples = mixed_radix(&obj_radix);
    let mor_tuples = mixed_radix(&mor_radix);
    debug_assert_eq!(obj_tuples.len() as u128, objects_needed);
    let encode = |radix: &[usize], digits: &[usize]| {
        digits.iter().zip(radix).fold(0, |acc, (d, r)| acc * r + d)
    };

    let objects = obj_tuples
        .iter()
        .map(|t| tuple_name(t.iter().zip(cats).map(|(&x, c)| c.objects()[x].as_str())))
        .collect();
    let morphisms = mor_tuples
        .iter()
        .map(|t| {
            let dom: Vec<usize> = t.iter().zip(cats).map(|(&f, c)| c.dom(f)).collect();
            let cod: Vec<usize> = t.iter().zip(cats).map(|(&f, c)| c.cod(f)).collect();
            Morphism {
                name: tuple_name(
                    t.iter()
                        .zip(cats)
                        .map(|(&f, c)| c.morphism(f).name.as_str()),
                ),
                dom: encode(&obj_radix, &dom),
                cod: encode(&obj_radix, &cod),
            }
        })
        .collect();
    let identities = obj_tuples
        .iter()
        .map(|t| {
            let ids: Vec<usize> = t.iter().zip(cats).map(|(&x, c)| c.identity(x)).collect();
            encode(&mor_radix, &ids)
        })
        .collect();
    FinCat::from_fn(objects, morphisms, identities, limits, |g, f| {
        let parts: Vec<usize> = mor_tuples[g]
            .iter()
            .zip(&mor_tuples[f])
            .zip(cats)
            .map(|((&gi, &fi), c)| c.compose(gi, fi).expect("componentwise composable"))
            .collect();
        Ok(encode(&mor_radix, &parts))
    })
}

/// Object and morphism maps of the projection from `product(cats)` onto
/// factor `i`.
pub fn product_projection(cats: &[FinCat], i: usize) -> (Vec<usize>, Vec<usize>) {
    assert!(i < cats.len(), "projection index out of range");
    let obj_radix: Vec<usize> = cats.iter().map(FinCat::object_count).collect();
    let mor_radix: Vec<usize> = cats.iter().map(FinCat::morphism_count).collect();
    let pick = |radix: &[usize]| mixed_radix(radix).into_iter().map(|t| t[i]).collect();
    (pick(&obj_radix), pick(&mor_radix))
}

fn mixed_radix(radix: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &r in radix {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..r).map(move |d| {
                    let mut t = prefix.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
    }
    out
}

/// The category of factorizations: objects are the morphisms of `cat`, and a
/// morphism `α → β` is a pair `(f, g)` with `g∘α∘f = β`. Composition of
/// `(f₁, g₁): α → β` and `(f₂, g₂): β → γ` is `(f₁∘f₂, g₂∘g₁)`.
pub fn factorization_category(cat: &FinCat, limits: &Limits) -> Result<FinCat> {
    let objects: Vec<String> = cat.morphisms().iter().map(|m| m.name.clone()).collect();
    let mut morphisms = Vec::new();
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    for alpha in 0..cat.morphism_count() {
        let m = cat.morphism(alpha);
        for &f in cat.incoming(m.dom) {
            for &g in cat.outgoing(m.cod) {
                let beta = cat
                    .compose(g, cat.compose(alpha, f).expect("f ends at dom alpha"))
                    .expect("g starts at cod alpha");
                index.insert((alpha, f, g), morphisms.len());
                pairs.push((f, g));
                morphisms.push(Morphism {
                    name: format!(
                        "({},{}):{}->{}",
                        cat.morphism(f).name,
                        cat.morphism(g).name,
                        m.name,
                        cat.morphism(beta).name
                    ),
                    dom: alpha,
                    cod: beta,
                });
                if morphisms.len() > limits.max_morphisms {
                    return Err(Error::budget(
                        "factorization category morphisms",
                        morphisms.len() as u128,
                        limits.max_morphisms as u128,
                    ));
                }
            }
        }
    }
    let identities = (0..cat.morphism_count())
        .map(|alpha| {
            let m = cat.morphism(alpha);
            index[&(alpha, cat.identity(m.dom), cat.identity(m.cod))]
        })
        .collect();
    let sources: Vec<usize> = morphisms.iter().map(|m: &Morphism| m.dom).collect();
    FinCat::from_fn(objects, morphisms, identities, limits, |second, first| {
        let (f1, g1) = pairs[first];
        let (f2, g2) = pairs[second];
        let f = cat.compose(f1, f2).expect("f1∘f2 composable");
        let g = cat.compose(g2, g1).expect("g2∘g1 composable");
        index
            .get(&(sources[first], f, g))
            .copied()
            .ok_or_else(|| Error::Invariant("factorization composite missing".into()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_shape() {
        let t = theta();
        assert_eq!((t.object_count(), t.morphism_count()), (2, 4));
        let nonid: Vec<usize> = (0..4).filter(|&f| !t.is_identity(f)).collect();
        assert!(nonid
            .iter()
            .all(|&f| nonid.iter().all(|&g| t.compose(g, f).is_none())));
    }

    #[test]
    fn product_counts() {
        let t2 = product(&[theta(), theta()], &Limits::default()).unwrap();
        assert_eq!((t2.object_count(), t2.morphism_count()), (4, 16));
        let t3 = theta_power(3).unwrap();
        assert_eq!((t3.object_count(), t3.morphism_count()), (8, 64));
        let with_unit = product(&[point(), theta()], &Limits::default()).unwrap();
        assert_eq!(
            (with_unit.object_count(), with_unit.morphism_count()),
            (2, 4)
        );
    }

    #[test]
    fn product_budget() {
        let tight = Limits {
            max_morphisms: 100,
            ..Limits::default()
        };
        assert!(matches!(
            product(&vec![theta(); 4], &tight),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn factorization_of_theta() {
        let t = theta();
        let ft = factorization_category(&t, &Limits::default()).unwrap();
        assert_eq!(ft.object_count(), 4);
        let one_a = t.morphism_index("1_a").unwrap();
        let alpha1 = t.morphism_index("alpha1").unwrap();
        // brute force: pairs (f, g) with g∘1_a∘f = alpha1
        let mut expected = 0;
        for f in 0..4 {
            for g in 0..4 {
                let composite = t.compose(one_a, f).and_then(|x| t.compose(g, x));
                if composite == Some(alpha1) {
                    expected += 1;
                }
            }
        }
        assert_eq!(expected, 1);
        assert_eq!(ft.hom(one_a, alpha1).count(), expected);
        let fp = factorization_category(&point(), &Limits::default()).unwrap();
        assert_eq!((fp.object_count(), fp.morphism_count()), (1, 1));
    }
}
