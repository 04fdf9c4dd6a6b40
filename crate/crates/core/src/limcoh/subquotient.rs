//! Kernel modulo image for maps between presented abelian groups.
//!
//! A group is presented as `Z^a / L` where `L` is spanned by `dᵢ·eᵢ` for the
//! generators of finite order `dᵢ`. For `D: Z^a/L_a → Z^b/L_b` and
//! `E: Z^c/L_c → Z^a/L_a` the quotient `ker D / im E` is computed as follows.
//!
//! 1. Cycles lift to `Z = {x ∈ Z^a : Dx ∈ L_b}`, the projection onto the
//!    first `a` coordinates of `ker [D | R_b]`, where `R_b` lists the
//!    relations of the target.
//! 2. A basis `G` of `Z` comes from the Smith form of a spanning set.
//! 3. The generators of `im E + L_a` are written in the basis `G`, giving an
//!    integer matrix `Y`, and `Z / (im E + L_a) ≅ coker Y`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::homology::{invariant_factors, smith_normal_form, FGAbGroup, IntMatrix};

fn relations(orders: &[BigInt]) -> IntMatrix {
    let torsion: Vec<usize> = (0..orders.len())
        .filter(|&i| !orders[i].is_zero())
        .collect();
    let mut r = IntMatrix::zeros(orders.len(), torsion.len());
    for (k, &i) in torsion.iter().enumerate() {
        r[(i, k)] = orders[i].clone();
    }
    r
}

fn hconcat(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    assert_eq!(a.rows(), b.rows());
    let mut m = IntMatrix::zeros(a.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            m[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..b.cols() {
            m[(i, a.cols() + j)] = b[(i, j)].clone();
        }
    }
    m
}

/// `ker(d) / (im(e) + relations)` where `d` is `b × a` and `e` is `a × c`.
pub(crate) fn subquotient(
    d: &IntMatrix,
    target_orders: &[BigInt],
    e: Option<&IntMatrix>,
    source_orders: &[BigInt],
) -> Result<FGAbGroup> {
    let a = source_orders.len();
    if a == 0 {
        return Ok(FGAbGroup::zero());
    }
    assert_eq!(d.cols(), a);
    assert_eq!(d.rows(), target_orders.len());

    // lifted cycles
    let spanning = if d.rows() == 0 {
        IntMatrix::identity(a)
    } else {
        let m = hconcat(d, &relations(target_orders));
        let s = smith_normal_form(&m);
        let k = m.cols() - s.rank;
        let mut span = IntMatrix::zeros(a, k);
        for (c, col) in (s.rank..m.cols()).enumerate() {
            for i in 0..a {
                span[(i, c)] = s.v[(i, col)].clone();
            }
        }
        span
    };
    let s = smith_normal_form(&spanning);
    let kv = spanning
        .mul(&s.v)
        .expect("BigInt arithmetic does not overflow");
    let r = s.rank;
    if r == 0 {
        return Ok(FGAbGroup::zero());
    }
    let mut basis = IntMatrix::zeros(a, r);
    for i in 0..a {
        for j in 0..r {
            basis[(i, j)] = kv[(i, j)].clone();
        }
    }

    // boundaries and relations in the basis of cycles
    let relations_a = relations(source_orders);
    let generators = match e {
        Some(e) => {
            assert_eq!(e.rows(), a);
            hconcat(e, &relations_a)
        }
        None => relations_a,
    };
    let g = smith_normal_form(&basis);
    debug_assert_eq!(g.rank, r);
    let ub =
        g.u.mul(&generators)
            .expect("BigInt arithmetic does not overflow");
    let mut z = IntMatrix::zeros(r, generators.cols());
    for j in 0..generators.cols() {
        for i in 0..a {
            let x = &ub[(i, j)];
            if i >= r {
                if !x.is_zero() {
                    return Err(Error::Invariant("a boundary is not a cycle".into()));
                }
                continue;
            }
            let (q, rem) = x.div_rem(&g.d[(i, i)]);
            if !rem.is_zero() {
                return Err(Error::Invariant("a boundary is not a cycle".into()));
            }
            z[(i, j)] = q;
        }
    }
    let mut vr = IntMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            vr[(i, j)] = g.v[(i, j)].clone();
        }
    }
    let y = vr.mul(&z).expect("BigInt arithmetic does not overflow");
    let factors = invariant_factors(&y);
    Ok(FGAbGroup::new(r - factors.len(), factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn cokernel_of_multiplication() {
        // ker(Z → 0) / im(2: Z → Z)
        let d = IntMatrix::zeros(0, 1);
        let e = IntMatrix::from_i64_rows(&[vec![2]]);
        assert_eq!(
            subquotient(&d, &[], Some(&e), &[b(0)]).unwrap(),
            FGAbGroup::cyclic(2)
        );
    }

    #[test]
    fn kernel_with_torsion_target() {
        // Z --×3--> Z/6: kernel is 2Z ≅ Z
        let d = IntMatrix::from_i64_rows(&[vec![3]]);
        assert_eq!(
            subquotient(&d, &[b(6)], None, &[b(0)]).unwrap(),
            FGAbGroup::free(1)
        );
        // Z/6 --×3--> Z/6: kernel {0,2,4} ≅ Z/3
        assert_eq!(
            subquotient(&d, &[b(6)], None, &[b(6)]).unwrap(),
            FGAbGroup::cyclic(3)
        );
    }
}
