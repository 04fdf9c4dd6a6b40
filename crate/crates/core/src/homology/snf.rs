//! Smith normal form over the integers.

use std::collections::HashSet;

use num_bigint::BigInt;

use super::int::{with_fallback, Int, Overflow};
use super::matrix::{DenseMatrix, IntMatrix, SparseMatrix};

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal, its nonzero
/// entries positive and each dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    pub u: DenseMatrix<T>,
    pub d: DenseMatrix<T>,
    pub v: DenseMatrix<T>,
    pub rank: usize,
}

impl<T: Int> SmithForm<T> {
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    fn to_big(&self) -> SmithForm<BigInt> {
        SmithForm {
            u: self.u.to_big(),
            d: self.d.to_big(),
            v: self.v.to_big(),
            rank: self.rank,
        }
    }
}

/// Smith normal form with transforms, in exact arithmetic.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm<BigInt> {
    let small = m.to_small();
    with_fallback(
        small.is_some(),
        || smith(small.as_ref().expect("checked"), true).map(|s| s.to_big()),
        || smith(m, true).expect("BigInt arithmetic does not overflow"),
    )
}

/// Nonzero invariant factors of `m`, without transforms.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let small = m.to_small();
    with_fallback(
        small.is_some(),
        || {
            Ok(smith(small.as_ref().expect("checked"), false)?
                .invariant_factors()
                .iter()
                .map(Int::to_bigint)
                .collect())
        },
        || {
            smith(m, false)
                .expect("BigInt arithmetic does not overflow")
                .invariant_factors()
        },
    )
}

fn smallest_nonzero<T: Int>(a: &DenseMatrix<T>, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..a.rows() {
        for j in from..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs_cmp(&a[(bi, bj)]).is_lt()) {
                best = Some((i, j));
                if x.is_unit() {
                    return best;
                }
            }
        }
    }
    best
}

/// Dense elimination with smallest-entry pivoting.
pub(crate) fn smith<T: Int>(
    m: &DenseMatrix<T>,
    transforms: bool,
) -> Result<SmithForm<T>, Overflow> {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = if transforms {
        DenseMatrix::identity(r)
    } else {
        DenseMatrix::zeros(0, 0)
    };
    let mut v = if transforms {
        DenseMatrix::identity(c)
    } else {
        DenseMatrix::zeros(0, 0)
    };
    let mut t = 0;
    while t < r.min(c) {
        let Some((pi, pj)) = smallest_nonzero(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if transforms {
            u.swap_rows(t, pi);
            v.swap_cols(t, pj);
        }
        loop {
            let pivot = a[(t, t)].clone();
            let mut leftover = false;
            for i in t + 1..r {
                if !a[(i, t)].is_zero() {
                    let q = a[(i, t)].quot(&pivot)?;
                    a.row_sub_mul(i, &q, t)?;
                    if transforms {
                        u.row_sub_mul(i, &q, t)?;
                    }
                    leftover |= !a[(i, t)].is_zero();
                }
            }
            for j in t + 1..c {
                if !a[(t, j)].is_zero() {
                    let q = a[(t, j)].quot(&pivot)?;
                    a.col_sub_mul(j, &q, t)?;
                    if transforms {
                        v.col_sub_mul(j, &q, t)?;
                    }
                    leftover |= !a[(t, j)].is_zero();
                }
            }
            if leftover {
                // move the smallest remainder in row or column t onto the pivot
                let mut best: Option<(bool, usize)> = None;
                let mut best_val: Option<T> = None;
                for i in t + 1..r {
                    let x = &a[(i, t)];
                    if !x.is_zero() && best_val.as_ref().is_none_or(|b| x.abs_cmp(b).is_lt()) {
                        best = Some((true, i));
                        best_val = Some(x.clone());
                    }
                }
                for j in t + 1..c {
                    let x = &a[(t, j)];
                    if !x.is_zero() && best_val.as_ref().is_none_or(|b| x.abs_cmp(b).is_lt()) {
                        best = Some((false, j));
                        best_val = Some(x.clone());
                    }
                }
                match best {
                    Some((true, i)) => {
                        a.swap_rows(t, i);
                        if transforms {
                            u.swap_rows(t, i);
                        }
                    }
                    Some((false, j)) => {
                        a.swap_cols(t, j);
                        if transforms {
                            v.swap_cols(t, j);
                        }
                    }
                    None => unreachable!("leftover entries exist"),
                }
                continue;
            }
            let mut offender = None;
            'scan: for i in t + 1..r {
                for j in t + 1..c {
                    if !a[(i, j)].is_zero() && !a[(i, j)].rem(&pivot)?.is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    a.row_add(t, i)?;
                    if transforms {
                        u.row_add(t, i)?;
                    }
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t)?;
            if transforms {
                u.negate_row(t)?;
            }
        }
        t += 1;
    }
    Ok(SmithForm {
        u,
        d: a,
        v,
        rank: t,
    })
}

/// Nonzero invariant factors of a sparse matrix.
///
/// Unit pivots are eliminated first, choosing at each step the unit entry
/// with the smallest fill-in estimate; whatever remains is handed to the
/// dense routine.
pub fn sparse_invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let small = m.columns_as::<i64>();
    with_fallback(
        small.is_some(),
        || {
            Ok(sparse_factors(small.clone().expect("checked"), m.rows)?
                .iter()
                .map(Int::to_bigint)
                .collect())
        },
        || {
            sparse_factors(
                m.columns_as::<BigInt>().expect("BigInt always converts"),
                m.rows,
            )
            .expect("BigInt arithmetic does not overflow")
        },
    )
}

/// Rank of a sparse integer matrix, i.e. its rank over the rationals.
pub fn sparse_rank(m: &SparseMatrix) -> usize {
    sparse_invariant_factors(m).len()
}

type SparseVec<T> = Vec<(usize, T)>;

fn axpy<T: Int>(
    target: &SparseVec<T>,
    factor: &T,
    pivot: &SparseVec<T>,
) -> Result<SparseVec<T>, Overflow> {
    // target - factor * pivot
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let ti = target.get(i).map(|e| e.0);
        let pj = pivot.get(j).map(|e| e.0);
        match (ti, pj) {
            (Some(a), Some(b)) if a == b => {
                let v = target[i].1.sub_mul(factor, &pivot[j].1)?;
                if !v.is_zero() {
                    out.push((a, v));
                }
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                out.push(target[i].clone());
                i += 1;
            }
            (Some(a), None) => {
                out.push((a, target[i].1.clone()));
                i += 1;
            }
            (_, Some(b)) => {
                out.push((b, pivot[j].1.mul(factor)?.neg()?));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Ok(out)
}

/// `vectors` are the lines being eliminated (columns of the original
/// matrix); `width` is their ambient dimension.
fn sparse_factors<T: Int>(
    mut vectors: Vec<SparseVec<T>>,
    width: usize,
) -> Result<Vec<T>, Overflow> {
    let mut owners: Vec<HashSet<usize>> = vec![HashSet::new(); width];
    for (k, v) in vectors.iter().enumerate() {
        for (i, _) in v {
            owners[*i].insert(k);
        }
    }
    let mut alive: Vec<bool> = vectors.iter().map(|v| !v.is_empty()).collect();
    let mut factors = Vec::new();
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        'search: for (k, v) in vectors.iter().enumerate() {
            if !alive[k] {
                continue;
            }
            for (i, x) in v {
                if x.is_unit() {
                    let cost = (v.len() - 1) * (owners[*i].len() - 1);
                    if best.is_none_or(|b| cost < b.2) {
                        best = Some((k, *i, cost));
                        if cost == 0 {
                            break 'search;
                        }
                    }
                }
            }
        }
        let Some((pk, pi, _)) = best else { break };
        let pivot = std::mem::take(&mut vectors[pk]);
        alive[pk] = false;
        for (i, _) in &pivot {
            owners[*i].remove(&pk);
        }
        let unit = pivot
            .iter()
            .find(|e| e.0 == pi)
            .expect("pivot entry")
            .1
            .clone();
        let others: Vec<usize> = owners[pi].iter().copied().collect();
        for k in others {
            let entry = vectors[k]
                .iter()
                .find(|e| e.0 == pi)
                .expect("owner has entry")
                .1
                .clone();
            let factor = entry.mul(&unit)?;
            let updated = axpy(&vectors[k], &factor, &pivot)?;
            for (i, _) in &vectors[k] {
                owners[*i].remove(&k);
            }
            for (i, _) in &updated {
                owners[*i].insert(k);
            }
            alive[k] = !updated.is_empty();
            vectors[k] = updated;
        }
        factors.push(T::one());
    }
    let rest: Vec<&SparseVec<T>> = vectors
        .iter()
        .zip(&alive)
        .filter(|(_, &a)| a)
        .map(|(v, _)| v)
        .collect();
    if !rest.is_empty() {
        let mut used: Vec<usize> = rest.iter().flat_map(|v| v.iter().map(|e| e.0)).collect();
        used.sort_unstable();
        used.dedup();
        let mut dense = DenseMatrix::<T>::zeros(rest.len(), used.len());
        for (r, v) in rest.iter().enumerate() {
            for (i, x) in v.iter() {
                let c = used.binary_search(i).expect("index collected");
                dense[(r, c)] = x.clone();
            }
        }
        factors.extend(smith(&dense, false)?.invariant_factors());
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn check(m: &IntMatrix) -> SmithForm<BigInt> {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(Int::is_zero(&s.d[(i, j)]));
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(
                Int::is_zero(&(&w[1] % &w[0])),
                "divisibility chain broken: {f:?}"
            );
        }
        s
    }

    #[test]
    fn small_examples() {
        assert_eq!(check(&big(&[vec![0, 0], vec![0, 0]])).rank, 0);
        let s = check(&big(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(1), BigInt::from(6)]
        );
        let s = check(&big(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(2), BigInt::from(4)]
        );
    }

    #[test]
    fn overflowing_input_falls_back() {
        let huge = BigInt::from(i64::MAX) * BigInt::from(4);
        let m = IntMatrix::from_rows(vec![
            vec![huge.clone(), BigInt::from(0)],
            vec![BigInt::from(0), huge.clone() * 3],
        ]);
        let s = check(&m);
        assert_eq!(s.invariant_factors(), vec![huge.clone(), huge * 3]);
        let near = BigInt::from(i64::MAX / 2 + 1);
        let m = IntMatrix::from_rows(vec![
            vec![near.clone(), near.clone() + 1],
            vec![near.clone() - 1, near.clone()],
        ]);
        check(&m);
    }

    #[test]
    fn sparse_agrees_with_dense() {
        let rows = vec![
            vec![2, 4, 0, 1],
            vec![6, 8, 0, 0],
            vec![0, 0, 5, 10],
            vec![1, 1, 1, 1],
        ];
        let dense = big(&rows);
        let mut sparse = SparseMatrix::zeros(4, 0);
        for j in 0..4 {
            sparse.push_column((0..4).map(|i| (i, BigInt::from(rows[i][j]))).collect());
        }
        assert_eq!(sparse_invariant_factors(&sparse), invariant_factors(&dense));
    }
}
