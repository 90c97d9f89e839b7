//! Dense matrices over a finite field.

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFq {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Fe>,
}

impl MatrixFq {
    /// Row-major constructor.
    pub fn new(field: &Field, rows: usize, cols: usize, entries: Vec<Fe>) -> Result<MatrixFq> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if let Some(&bad) = entries.iter().find(|&&e| !field.contains(e)) {
            return Err(Error::ElementOutOfRange {
                index: bad.index(),
                q: field.q(),
            });
        }
        Ok(MatrixFq {
            field: field.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> MatrixFq {
        MatrixFq {
            field: field.clone(),
            rows,
            cols,
            entries: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> MatrixFq {
        let mut m = MatrixFq::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    /// Builds a matrix from `f(i, j)`.
    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Fe,
    ) -> MatrixFq {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        MatrixFq {
            field: field.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Fe] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Submatrix of rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> MatrixFq {
        MatrixFq::from_fn(&self.field, r1 - r0, c1 - c0, |i, j| {
            self.get(r0 + i, c0 + j)
        })
    }

    /// The matrix without its last row.
    pub fn drop_last_row(&self) -> MatrixFq {
        let rows = self.rows.saturating_sub(1);
        self.block(0, rows, 0, self.cols)
    }

    pub fn neg(&self) -> MatrixFq {
        MatrixFq {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&e| self.field.neg(e)).collect(),
        }
    }

    pub fn mul(&self, rhs: &MatrixFq) -> Result<MatrixFq> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let f = &self.field;
        Ok(MatrixFq::from_fn(f, self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Fe::ZERO, |acc, k| {
                f.add(acc, f.mul(self.get(i, k), rhs.get(k, j)))
            })
        }))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn scale_row(&mut self, i: usize, c: Fe) {
        for j in 0..self.cols {
            let v = self.field.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    /// Rank by Gaussian elimination, taking the first nonzero entry in each
    /// column as pivot.
    pub fn rank(&self) -> usize {
        let f = &self.field;
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = f.inv(m.get(rank, col)).expect("pivot is nonzero");
            m.scale_row(rank, inv);
            for r in rank + 1..m.rows {
                let factor = m.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(rank, j)));
                    m.set(r, j, v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Whether the last row lies in the span of the others.
    pub fn last_row_dependent(&self) -> bool {
        if self.rows == 0 {
            return true;
        }
        self.rank() == self.drop_last_row().rank()
    }
}
