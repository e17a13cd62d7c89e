use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// All-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![1; rows * cols],
        }
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &d) in entries.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::LengthMismatch {
                left: c,
                right: bad.len(),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.concat(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)]).sum())
            .collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * k).collect(),
        }
    }

    fn zip_with(&self, other: &IntMatrix, f: impl Fn(i64, i64) -> i64) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::LengthMismatch {
                left: self.rows * self.cols,
                right: other.rows * other.cols,
            });
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, d: &IntMatrix) -> Result<IntMatrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::Internal("inconsistent block shapes".into()));
        }
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        Ok(IntMatrix::from_fn(rows, cols, |i, j| {
            match (i < a.rows, j < a.cols) {
                (true, true) => a[(i, j)],
                (true, false) => b[(i, j - a.cols)],
                (false, true) => c[(i - a.rows, j)],
                (false, false) => d[(i - a.rows, j - a.cols)],
            }
        }))
    }

    /// Copy with the listed rows and columns removed (same index set for both).
    pub fn delete_rows_cols(&self, removed: &[usize]) -> IntMatrix {
        let keep_r: Vec<usize> = (0..self.rows).filter(|i| !removed.contains(i)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|j| !removed.contains(j)).collect();
        IntMatrix::from_fn(keep_r.len(), keep_c.len(), |i, j| self[(keep_r[i], keep_c[j])])
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&x| x as f64).collect()
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn max_abs_row_sum(&self) -> i64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum())
            .max()
            .unwrap_or(0)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}
