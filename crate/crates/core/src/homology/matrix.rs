use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;

use super::int::{Int, Overflow};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = DenseMatrix<BigInt>;

impl<T: Int> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Panics when the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        DenseMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[target] -= q · row[source]`.
    pub(crate) fn row_sub_mul(
        &mut self,
        target: usize,
        q: &T,
        source: usize,
    ) -> Result<(), Overflow> {
        for j in 0..self.cols {
            let s = &self.data[source * self.cols + j];
            if !s.is_zero() {
                let v = self.data[target * self.cols + j].sub_mul(q, s)?;
                self.data[target * self.cols + j] = v;
            }
        }
        Ok(())
    }

    /// `col[target] -= q · col[source]`.
    pub(crate) fn col_sub_mul(
        &mut self,
        target: usize,
        q: &T,
        source: usize,
    ) -> Result<(), Overflow> {
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + source];
            if !s.is_zero() {
                let v = self.data[i * self.cols + target].sub_mul(q, s)?;
                self.data[i * self.cols + target] = v;
            }
        }
        Ok(())
    }

    pub(crate) fn row_add(&mut self, target: usize, source: usize) -> Result<(), Overflow> {
        for j in 0..self.cols {
            let v = self.data[target * self.cols + j].add(&self.data[source * self.cols + j])?;
            self.data[target * self.cols + j] = v;
        }
        Ok(())
    }

    pub(crate) fn negate_row(&mut self, i: usize) -> Result<(), Overflow> {
        for j in 0..self.cols {
            let v = self.data[i * self.cols + j].neg()?;
            self.data[i * self.cols + j] = v;
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Overflow> {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add(&a.mul(b)?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, Overflow> {
        assert_eq!(
            self.cols,
            v.len(),
            "dimension mismatch in matrix-vector product"
        );
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .try_fold(T::zero(), |acc, (a, b)| {
                        if a.is_zero() || b.is_zero() {
                            Ok(acc)
                        } else {
                            acc.add(&a.mul(b)?)
                        }
                    })
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Int::is_zero)
    }

    pub(crate) fn try_map<U: Int>(&self, f: impl Fn(&T) -> Option<U>) -> Option<DenseMatrix<U>> {
        Some(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Option<Vec<_>>>()?,
        })
    }

    pub fn to_big(&self) -> IntMatrix {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Int::to_bigint).collect(),
        }
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub(crate) fn to_small(&self) -> Option<DenseMatrix<i64>> {
        self.try_map(<i64 as Int>::from_bigint)
    }
}

impl<T> Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:?}", self.data[i * self.cols + j]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Column-sparse integer matrix; column `j` lists the nonzero entries
/// `(row, value)` of the image of basis vector `j`, sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, BigInt)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds a column from unsorted entries, summing duplicates.
    pub fn push_column(&mut self, mut entries: Vec<(usize, BigInt)>) {
        entries.sort_by_key(|e| e.0);
        let mut merged: Vec<(usize, BigInt)> = Vec::with_capacity(entries.len());
        for (r, v) in entries {
            match merged.last_mut() {
                Some((last, acc)) if *last == r => *acc += v,
                _ => merged.push((r, v)),
            }
        }
        merged.retain(|(_, v)| !Int::is_zero(v));
        self.columns.push(merged);
        self.cols = self.columns.len();
    }

    /// Sums entries given as `(row, col, value)`.
    pub fn from_triplets(rows: usize, cols: usize, triplets: Vec<(usize, usize, BigInt)>) -> Self {
        let mut buckets: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); cols];
        for (i, j, v) in triplets {
            assert!(i < rows && j < cols, "triplet outside the matrix");
            buckets[j].push((i, v));
        }
        let mut m = SparseMatrix::zeros(rows, 0);
        for col in buckets {
            m.push_column(col);
        }
        m.cols = cols;
        m
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in sparse product"
        );
        let mut out = SparseMatrix::zeros(self.rows, 0);
        for col in &other.columns {
            let mut acc = Vec::new();
            for (k, b) in col {
                for (i, a) in &self.columns[*k] {
                    acc.push((*i, a * b));
                }
            }
            out.push_column(acc);
        }
        out.cols = other.cols;
        out
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                m[(*i, j)] = v.clone();
            }
        }
        m
    }

    /// `self ∘ other` is zero; `other` maps into the domain of `self`.
    pub fn composes_to_zero(&self, other: &SparseMatrix) -> bool {
        other.columns.iter().all(|col| {
            let mut acc: Vec<(usize, BigInt)> = Vec::new();
            for (k, b) in col {
                for (i, a) in &self.columns[*k] {
                    acc.push((*i, a * b));
                }
            }
            acc.sort_by_key(|e| e.0);
            let mut iter = acc.into_iter().peekable();
            while let Some((i, mut v)) = iter.next() {
                while let Some((_, w)) = iter.next_if(|e| e.0 == i) {
                    v += w;
                }
                if !Int::is_zero(&v) {
                    return false;
                }
            }
            true
        })
    }

    /// Columns as sparse vectors over `T`, if every entry converts.
    pub(crate) fn columns_as<T: Int>(&self) -> Option<Vec<Vec<(usize, T)>>> {
        self.columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(i, v)| T::from_bigint(v).map(|x| (*i, x)))
                    .collect()
            })
            .collect()
    }
}
