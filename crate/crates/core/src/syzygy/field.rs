use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{sparse_rank, SparseMatrix};

/// Coefficient field: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Input(format!("{p} is not a prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Input(format!("prime {p} is too large")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Rank of an integer matrix after mapping it into the field.
    pub fn rank(&self, m: &SparseMatrix) -> usize {
        match self {
            FieldSpec::Rationals => sparse_rank(m),
            FieldSpec::Prime(p) => rank_mod_p(m, *p),
        }
    }

    fn normalize(&self, x: BigRational) -> BigRational {
        match self {
            FieldSpec::Rationals => x,
            FieldSpec::Prime(p) => {
                let p = BigInt::from(*p);
                let num = ((x.numer() % &p) + &p) % &p;
                let den = ((x.denom() % &p) + &p) % &p;
                let inv = den.modpow(&(&p - 2u32), &p);
                BigRational::from_integer(num * inv % &p)
            }
        }
    }

    /// Basis of the kernel of a dense matrix over the field.
    pub(crate) fn kernel(&self, rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigRational>> {
        let mut a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| self.normalize(BigRational::from_integer(x.clone())))
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            let inv = self.normalize(BigRational::one() / a[row][col].clone());
            for x in a[row].iter_mut() {
                *x = self.normalize(&*x * &inv);
            }
            for i in 0..a.len() {
                if i != row && !a[i][col].is_zero() {
                    let factor = a[i][col].clone();
                    for j in 0..cols {
                        let v = &a[i][j] - &factor * &a[row][j];
                        a[i][j] = self.normalize(v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); cols];
                v[f] = BigRational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.normalize(-a[r][f].clone());
                }
                v
            })
            .collect()
    }

    /// Rank of the span of rational vectors.
    pub(crate) fn dense_rank(&self, vectors: &[Vec<BigRational>]) -> usize {
        let mut rows: Vec<Vec<BigRational>> = vectors
            .iter()
            .map(|v| v.iter().map(|x| self.normalize(x.clone())).collect())
            .collect();
        let cols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            for i in rank + 1..rows.len() {
                if !rows[i][col].is_zero() {
                    let factor = self.normalize(&rows[i][col] / &rows[rank][col]);
                    for j in col..cols {
                        let v = &rows[i][j] - &factor * &rows[rank][j];
                        rows[i][j] = self.normalize(v);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q0"),
            FieldSpec::Prime(p) => write!(f, "p{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `q0` for the rationals, `pP` for the field with `P` elements.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q0" || s == "q" || s == "0" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix('p')
            .or_else(|| s.strip_prefix("F_"))
            .unwrap_or(s);
        let p: u64 = digits.parse().map_err(|_| {
            Error::Input(format!(
                "unknown field `{s}`, expected q0 or pP with P prime"
            ))
        })?;
        FieldSpec::prime(p)
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    result
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Rank over `F_p` by incremental sparse echelon form: each stored vector is
/// indexed by its leading coordinate.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let pb = BigInt::from(p);
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for col in &m.columns {
        let mut v: Vec<(usize, u64)> = col
            .iter()
            .filter_map(|(i, x)| {
                let r = ((x % &pb) + &pb) % &pb;
                let r = u64::try_from(r).expect("reduced below p");
                (r != 0).then_some((*i, r))
            })
            .collect();
        while let Some(&(lead, a)) = v.first() {
            let Some(piv) = pivots.get(&lead) else {
                let inv = inv_mod(a, p);
                for e in v.iter_mut() {
                    e.1 = mul_mod(e.1, inv, p);
                }
                pivots.insert(lead, v);
                break;
            };
            // v -= a * piv (piv has leading coefficient 1)
            let mut out = Vec::with_capacity(v.len() + piv.len());
            let (mut i, mut j) = (0, 0);
            while i < v.len() || j < piv.len() {
                match (v.get(i), piv.get(j)) {
                    (Some(&(r1, x)), Some(&(r2, y))) if r1 == r2 => {
                        let z = (x + p - mul_mod(a, y, p)) % p;
                        if z != 0 {
                            out.push((r1, z));
                        }
                        i += 1;
                        j += 1;
                    }
                    (Some(&(r1, x)), Some(&(r2, _))) if r1 < r2 => {
                        out.push((r1, x));
                        i += 1;
                    }
                    (Some(&e), None) => {
                        out.push(e);
                        i += 1;
                    }
                    (_, Some(&(r2, y))) => {
                        out.push((r2, (p - mul_mod(a, y, p)) % p));
                        j += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
            v = out;
        }
    }
    pivots.len()
}
