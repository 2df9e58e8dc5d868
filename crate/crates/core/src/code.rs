//! Linear codes under the Hamming metric.

use std::fmt;
use std::sync::Arc;

use crate::enumerate::{self, Metric, MinWeight, SearchOptions};
use crate::error::{Error, Result};
use crate::gf::{Felt, Field};
use crate::matgf::{self, Matrix};

/// An `[n, k]` code stored by its canonical (RREF, full-rank) generator.
///
/// Two codes are equal exactly when their canonical generators are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    g: Matrix,
}

impl LinearCode {
    /// Row space of `m`; redundant rows are dropped.
    pub fn from_generator(m: &Matrix) -> LinearCode {
        LinearCode { g: m.row_basis() }
    }

    pub fn zero(field: &Arc<Field>, n: usize) -> LinearCode {
        LinearCode { g: Matrix::zeros(field, 0, n) }
    }

    pub fn full(field: &Arc<Field>, n: usize) -> LinearCode {
        LinearCode { g: Matrix::identity(field, n) }
    }

    /// The code with parity-check matrix `h`.
    pub fn from_parity_check(h: &Matrix) -> LinearCode {
        LinearCode::from_generator(&h.right_kernel())
    }

    pub fn len(&self) -> usize {
        self.g.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.g.cols() == 0
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn field(&self) -> &Arc<Field> {
        self.g.field()
    }

    /// Canonical generator matrix.
    pub fn generator(&self) -> &Matrix {
        &self.g
    }

    /// A full-rank parity-check matrix (the generator of the dual).
    pub fn parity_check(&self) -> Matrix {
        self.g.right_kernel()
    }

    /// Euclidean dual.
    pub fn dual(&self) -> LinearCode {
        LinearCode::from_parity_check(&self.g)
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        matgf::same_field(self.field(), other.field())?;
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(())
    }

    /// Whether `v` is a codeword.
    pub fn contains(&self, v: &[Felt]) -> Result<bool> {
        if v.len() != self.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: v.len() });
        }
        let h = self.parity_check();
        Ok(h.mul_vec(v)?.iter().all(|s| s.is_zero()))
    }

    /// `self ⊆ other`.
    pub fn is_subcode(&self, other: &LinearCode) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.g.vconcat(&other.g)?.rank() == other.dim())
    }

    /// `dim(self ∩ other)`.
    pub fn intersection_dim(&self, other: &LinearCode) -> Result<usize> {
        self.check_compatible(other)?;
        matgf::intersection_dim(&self.g, &other.g)
    }

    /// Encodes an information vector of length `k`.
    pub fn encode(&self, info: &[Felt]) -> Result<Vec<Felt>> {
        if info.len() != self.dim() {
            return Err(Error::LengthMismatch { left: self.dim(), right: info.len() });
        }
        let f = self.field();
        let mut out = vec![Felt::ZERO; self.len()];
        for (j, &c) in info.iter().enumerate() {
            f.axpy(&mut out, c, self.g.row(j));
        }
        Ok(out)
    }

    /// Exact minimum Hamming distance by projective enumeration.
    pub fn min_hamming_distance(&self, opts: &SearchOptions) -> Result<MinWeight> {
        enumerate::min_weight(&self.g, Metric::Hamming, opts)
    }

    /// Code with columns rearranged: column `c` of the result is column `order[c]` of `self`.
    pub fn select_columns(&self, order: &[usize]) -> LinearCode {
        LinearCode::from_generator(&self.g.select_cols(order))
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]_{} ", self.len(), self.dim(), self.field().order())?;
        self.g.fmt(f)
    }
}
