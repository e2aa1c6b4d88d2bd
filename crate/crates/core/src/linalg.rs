//! Small dense exact linear algebra over [`Rational`].

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Vector = Vec<Rational>;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Serialized as a list of rows.
impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq((0..self.rows).map(|i| self.row(i)))
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector]) -> Result<Self> {
        let ncols = cols.len();
        let nrows = cols.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(nrows, ncols);
        for (j, col) in cols.iter().enumerate() {
            if col.len() != nrows {
                return Err(Error::DimensionMismatch {
                    expected: nrows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.data[i * ncols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let mut m = Matrix::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if other.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s: Rational = (0..self.cols)
                    .map(|l| self.get(i, l) * other.get(l, j))
                    .sum();
                out.data[i * other.cols + j] = s;
            }
        }
        Ok(out)
    }

    /// `a^T M b`.
    pub fn bilinear(&self, a: &[Rational], b: &[Rational]) -> Result<Rational> {
        if a.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: a.len(),
            });
        }
        if b.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: b.len(),
            });
        }
        let mut acc = Rational::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                let g = self.get(i, j);
                if !g.is_zero() && !bj.is_zero() {
                    acc += &(&(ai * g) * bj);
                }
            }
        }
        Ok(acc)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate(None).len()
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                let f = m.get(r, col) / &pivot;
                if !f.is_zero() {
                    m.axpy_row(r, col, &f);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[target] -= factor * row[source]
    fn axpy_row(&mut self, target: usize, source: usize, factor: &Rational) {
        for j in 0..self.cols {
            let delta = factor * self.get(source, j);
            self.data[target * self.cols + j] -= &delta;
        }
    }

    /// Gauss-Jordan elimination with the first nonzero pivot in each column,
    /// restricted to the first `limit` columns (all columns when `None`).
    /// Returns the pivot columns; the matrix is left in reduced row echelon form.
    fn eliminate(&mut self, limit: Option<usize>) -> Vec<usize> {
        let ncols = limit.unwrap_or(self.cols);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..ncols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(p, row);
            let inv = self.get(row, col).recip().expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row {
                    let f = self.get(r, col).clone();
                    if !f.is_zero() {
                        self.axpy_row(r, row, &f);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solves the square nonsingular system `a x = b` exactly.
pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Result<Vector> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            found: a.cols,
        });
    }
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            found: b.len(),
        });
    }
    let n = a.rows;
    let mut aug = augment(a, b);
    let pivots = aug.eliminate(Some(n));
    if pivots.len() < n {
        return Err(Error::Singular {
            rank: pivots.len(),
            dim: n,
        });
    }
    Ok((0..n).map(|i| aug.get(i, n).clone()).collect())
}

/// Solves `a x = b` for a matrix with full column rank and possibly more rows
/// than columns. Fails when the columns are dependent or `b` is outside their span.
pub fn solve_consistent(a: &Matrix, b: &[Rational]) -> Result<Vector> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            found: b.len(),
        });
    }
    let n = a.cols;
    let mut aug = augment(a, b);
    let pivots = aug.eliminate(Some(n));
    if pivots.len() < n {
        return Err(Error::Singular {
            rank: pivots.len(),
            dim: n,
        });
    }
    if (n..aug.rows).any(|r| !aug.get(r, n).is_zero()) {
        return Err(Error::Inconsistent);
    }
    Ok((0..n).map(|i| aug.get(i, n).clone()).collect())
}

fn augment(a: &Matrix, b: &[Rational]) -> Matrix {
    let mut aug = Matrix::zeros(a.rows, a.cols + 1);
    for (i, bi) in b.iter().enumerate().take(a.rows) {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols, bi.clone());
    }
    aug
}
