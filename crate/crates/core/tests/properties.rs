//! Property tests of algebraic invariants.

mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tracehom::fincat::{theta, theta_power, FinCat};
use tracehom::graph::all_cliques;
use tracehom::homology::{
    cohomology_constant, invariant_factors, nerve_complex, smith_normal_form,
    sparse_invariant_factors, FGAbGroup, IntMatrix, SparseMatrix,
};
use tracehom::limcoh::random::{random_diagram, random_poset, random_theta_power_diagram};
use tracehom::limcoh::{cochain_complex, constant_diagram, lim_n, normalization_agreement};
use tracehom::syzygy::{build_resolution, verify_exactness, FieldSpec};
use tracehom::trace::{clique_polynomial, growth_coefficients};
use tracehom::Limits;

use common::*;

/// Determinant by fraction-free elimination.
fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    let mut a = m.to_rows();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        sign
    } else {
        sign * &a[n - 1][n - 1]
    }
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-9i64..10, c), r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_factors_the_matrix(rows in matrix_strategy()) {
        let a = IntMatrix::from_i64_rows(&rows);
        let s = smith_normal_form(&a);
        let (u, v) = (&s.u, &s.v);
        prop_assert_eq!(u.mul(&a).unwrap().mul(v).unwrap(), s.d.clone());
        prop_assert_eq!(determinant(u).abs(), BigInt::from(1));
        prop_assert_eq!(determinant(v).abs(), BigInt::from(1));
        let factors = s.invariant_factors();
        prop_assert_eq!(factors.len(), s.rank);
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j || i >= s.rank {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        for w in factors.windows(2) {
            prop_assert!(w[0].is_positive() && w[1].is_multiple_of(&w[0]));
        }
        let mut sparse = SparseMatrix::zeros(a.rows(), 0);
        for j in 0..a.cols() {
            sparse.push_column((0..a.rows()).map(|i| (i, a[(i, j)].clone())).collect());
        }
        prop_assert_eq!(sparse_invariant_factors(&sparse), invariant_factors(&a));
    }

    #[test]
    fn nerve_boundaries_square_to_zero(seed in 0u64..1000, n in 2usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poset(n, 0.5, &mut rng).unwrap();
        let cx = nerve_complex(&p, 3, &Limits::default()).unwrap();
        cx.check_square_zero().unwrap();
    }

    #[test]
    fn coboundaries_square_to_zero(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_theta_power_diagram(2, &mut rng).unwrap();
        for normalized in [false, true] {
            cochain_complex(&f, 2, normalized, &Limits::default()).unwrap().check_square_zero().unwrap();
        }
    }
}

fn poset_base(seed: u64) -> Arc<FinCat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Arc::new(random_poset(3 + (seed % 3) as usize, 0.5, &mut rng).unwrap())
}

#[test]
fn normalization_agrees_on_random_diagrams() {
    let limits = Limits::default();
    let mut checked = 0;
    for seed in 0..12u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for f in [
            random_theta_power_diagram(1, &mut rng).unwrap(),
            random_theta_power_diagram(2, &mut rng).unwrap(),
            random_diagram(&poset_base(seed), &mut rng).unwrap(),
        ] {
            let report = normalization_agreement(&f, 3, &limits).unwrap();
            assert_eq!(report.full, report.normalized);
            checked += 1;
        }
    }
    assert!(checked >= 20);
}

#[test]
fn constant_coefficients_match_nerve_cohomology() {
    let limits = Limits::default();
    let groups = [
        FGAbGroup::free(1),
        FGAbGroup::cyclic(2),
        FGAbGroup::cyclic(6),
        FGAbGroup::free(2),
    ];
    let mut bases: Vec<Arc<FinCat>> = vec![Arc::new(theta()), Arc::new(theta_power(2).unwrap())];
    bases.extend((0..6).map(poset_base));
    for base in &bases {
        for a in &groups {
            let f = constant_diagram(base, a);
            for n in 0..=3 {
                assert_eq!(
                    lim_n(&f, n, &limits).unwrap(),
                    cohomology_constant(base, a, n, &limits).unwrap(),
                    "degree {n}, coefficients {a}"
                );
            }
        }
    }
}

#[test]
fn graded_piece_dimensions_and_euler_characteristic() {
    for (name, g) in test_graphs() {
        let counts = all_cliques(&g).counts_by_size();
        let growth = growth_coefficients(&g, 6);
        let c = clique_polynomial(&g);
        let pieces = verify_exactness(
            &build_resolution(&g, FieldSpec::Rationals),
            4,
            &Limits::default(),
        )
        .unwrap();
        for p in &pieces {
            for (n, &d) in p.dims.iter().enumerate() {
                let expected = if n <= p.m {
                    &growth[p.m - n] * BigInt::from(counts[n])
                } else {
                    BigInt::zero()
                };
                assert_eq!(BigInt::from(d), expected, "{name} m={} n={n}", p.m);
            }
            let euler: BigInt = (0..c.len().min(p.m + 1))
                .map(|k| BigInt::from(c[k]) * &growth[p.m - k])
                .sum();
            if p.m >= 1 {
                assert!(euler.is_zero(), "{name} m={}", p.m);
                assert_eq!(p.euler, 0);
            }
        }
    }
}
