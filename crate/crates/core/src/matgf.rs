//! Dense matrices over GF(q).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Felt, Field};

/// A row-major dense matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Felt>,
    field: Arc<Field>,
}

/// Reduced row echelon form with rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub(crate) fn same_field(a: &Arc<Field>, b: &Arc<Field>) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::FieldMismatch)
    }
}

impl Matrix {
    pub fn zeros(field: &Arc<Field>, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Felt::ZERO; rows * cols], field: field.clone() }
    }

    pub fn identity(field: &Arc<Field>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Felt::ONE);
        }
        m
    }

    /// Builds a matrix from row vectors; every row must have length `cols`.
    pub fn from_rows(field: &Arc<Field>, cols: usize, rows: &[Vec<Felt>]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!("row of length {} in a {}-column matrix", r.len(), cols)));
            }
            if let Some(bad) = r.iter().find(|v| v.repr() >= field.order()) {
                return Err(Error::ParameterOutOfRange(format!("entry {bad} is not in GF({})", field.order())));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data, field: field.clone() })
    }

    /// Convenience constructor from integer representations.
    pub fn from_ints(field: &Arc<Field>, rows: &[&[u32]]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Felt>> = rows.iter().map(|r| r.iter().map(|&v| Felt(v as u16)).collect()).collect();
        Matrix::from_rows(field, cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Felt {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Felt) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Felt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [Felt] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Felt]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<Felt>> {
        self.row_iter().map(<[Felt]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        same_field(&self.field, &other.field)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(r, k);
                if !a.is_zero() {
                    f.axpy(dst, a, other.row(k));
                }
            }
        }
        Ok(out)
    }

    /// `self · otherᵀ`, without materializing the transpose.
    pub fn mul_transpose(&self, other: &Matrix) -> Result<Matrix> {
        same_field(&self.field, &other.field)?;
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times ({}x{})^T",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let v = self.field.dot(self.row(i), other.row(j));
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    /// Matrix–vector product `self · vᵀ`.
    pub fn mul_vec(&self, v: &[Felt]) -> Result<Vec<Felt>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { left: self.cols, right: v.len() });
        }
        Ok(self.row_iter().map(|r| self.field.dot(r, v)).collect())
    }

    pub fn hconcat(&self, other: &Matrix) -> Result<Matrix> {
        same_field(&self.field, &other.field)?;
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch(format!("hconcat of {} and {} rows", self.rows, other.rows)));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(Matrix { rows: self.rows, cols, data, field: self.field.clone() })
    }

    pub fn vconcat(&self, other: &Matrix) -> Result<Matrix> {
        same_field(&self.field, &other.field)?;
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!("vconcat of {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data, field: self.field.clone() })
    }

    /// Multiplies row `i` by `factors[i]`.
    pub fn scale_rows(&self, factors: &[Felt]) -> Result<Matrix> {
        if factors.len() != self.rows {
            return Err(Error::LengthMismatch { left: self.rows, right: factors.len() });
        }
        let mut out = self.clone();
        for (r, &c) in factors.iter().enumerate() {
            let f = self.field.clone();
            f.scale(out.row_mut(r), c);
        }
        Ok(out)
    }

    /// Multiplies column `j` by `factors[j]`.
    pub fn scale_cols(&self, factors: &[Felt]) -> Result<Matrix> {
        if factors.len() != self.cols {
            return Err(Error::LengthMismatch { left: self.cols, right: factors.len() });
        }
        let mut out = self.clone();
        for r in 0..self.rows {
            for (c, &s) in factors.iter().enumerate() {
                let v = self.field.mul(out.get(r, c), s);
                out.set(r, c, v);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = self.field.neg(*v);
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix { rows: idx.len(), cols: self.cols, data, field: self.field.clone() }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Gauss–Jordan elimination with pivots normalized to one.
    pub fn rref(&self) -> Rref {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = f.inv(m.get(lead, c)).expect("pivot is nonzero");
            f.scale(m.row_mut(lead), inv);
            let pivot_row = m.row(lead).to_vec();
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let v = m.get(r, c);
                if !v.is_zero() {
                    f.axpy(m.row_mut(r), f.neg(v), &pivot_row);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        Rref { matrix: m, rank: lead, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * cols);
        head[lo * cols..(lo + 1) * cols].swap_with_slice(&mut tail[..cols]);
    }

    /// Basis of `{v : self · vᵀ = 0}` as the rows of a `(cols − rank) × cols` matrix.
    pub fn right_kernel(&self) -> Matrix {
        let Rref { matrix: r, rank, pivots } = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, Felt::ONE);
            for (pr, &pc) in pivots.iter().enumerate().take(rank) {
                out.set(i, pc, f.neg(r.get(pr, fc)));
            }
        }
        out
    }

    /// Nonzero rows of the RREF.
    pub fn row_basis(&self) -> Matrix {
        let rr = self.rref();
        let idx: Vec<usize> = (0..rr.rank).collect();
        rr.matrix.select_rows(&idx)
    }
}

/// `dim(rowspace(a) ∩ rowspace(b))`.
pub fn intersection_dim(a: &Matrix, b: &Matrix) -> Result<usize> {
    let stacked = a.vconcat(b)?;
    Ok(a.rank() + b.rank() - stacked.rank())
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.order())?;
        for r in self.row_iter() {
            let s: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", s.join(" "))?;
        }
        Ok(())
    }
}
