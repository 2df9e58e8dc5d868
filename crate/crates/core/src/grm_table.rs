//! Reference parameters of symplectic SO and DC codes `PP(GRM(i), GRM(r))`
//! and their verification.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::certify::{certify_symplectic, Certified, CertifyOptions};
use crate::enumerate::SearchOptions;
use crate::error::Result;
use crate::families::grm_plotkin_codes;
use crate::gf::Field;
use crate::symplectic;

/// Enough classes to enumerate `[14,10]` over GF(7) exhaustively.
pub const TABLE_BUDGET: u64 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `PP(GRM(i), GRM(r))`.
    So,
    /// Its symplectic dual.
    Dc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub q: u32,
    pub m: u32,
    pub r: u32,
    pub i: u32,
    pub side: Side,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Symplectic Singleton bound of the reference row.
    pub bound: usize,
}

#[allow(clippy::too_many_arguments)]
const fn row(q: u32, m: u32, r: u32, i: u32, side: Side, n: usize, k: usize, d: usize, bound: usize) -> TableRow {
    TableRow { q, m, r, i, side, n, k, d, bound }
}

pub const ROWS: [TableRow; 22] = [
    row(2, 2, 0, 1, Side::So, 8, 4, 2, 3),
    row(2, 3, 1, 1, Side::So, 16, 8, 4, 5),
    row(3, 1, 1, 0, Side::So, 6, 3, 2, 2),
    row(3, 2, 1, 1, Side::So, 18, 6, 6, 7),
    row(3, 2, 2, 1, Side::So, 18, 9, 3, 5),
    row(4, 1, 1, 1, Side::So, 8, 4, 3, 3),
    row(4, 2, 1, 1, Side::So, 32, 6, 12, 14),
    row(5, 1, 1, 1, Side::So, 10, 4, 4, 4),
    row(5, 1, 2, 1, Side::So, 10, 5, 3, 3),
    row(7, 1, 1, 1, Side::So, 14, 4, 6, 6),
    row(7, 1, 2, 2, Side::So, 14, 6, 5, 5),
    row(3, 2, 1, 1, Side::Dc, 18, 12, 3, 4),
    row(3, 3, 1, 1, Side::Dc, 54, 46, 3, 5),
    row(4, 2, 1, 1, Side::Dc, 32, 26, 3, 4),
    row(4, 3, 1, 1, Side::Dc, 128, 120, 3, 5),
    row(5, 1, 1, 1, Side::Dc, 10, 6, 3, 3),
    row(5, 2, 1, 1, Side::Dc, 50, 44, 3, 4),
    row(5, 3, 1, 1, Side::Dc, 250, 242, 3, 5),
    row(7, 1, 1, 1, Side::Dc, 14, 10, 3, 3),
    row(7, 1, 2, 2, Side::Dc, 14, 8, 4, 4),
    row(7, 2, 1, 1, Side::Dc, 98, 92, 3, 4),
    row(7, 3, 1, 1, Side::Dc, 686, 678, 3, 5),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowCheck {
    pub row: TableRow,
    pub n: usize,
    pub k: usize,
    pub predicted: Option<usize>,
    pub distance: Certified,
    pub bound: usize,
    /// SO for SO rows, DC for DC rows.
    pub orthogonality: bool,
    pub pass: bool,
}

pub fn default_options() -> CertifyOptions {
    CertifyOptions { search: SearchOptions::with_budget(TABLE_BUDGET), ..CertifyOptions::default() }
}

/// Rebuilds one row and certifies its symplectic distance: exhaustively when
/// the code has at most `opts.search.budget` projective classes, otherwise by
/// bounded search below the weight of the constructive certificate.
pub fn verify_row(row: &TableRow, opts: &CertifyOptions) -> Result<RowCheck> {
    let field = Arc::new(Field::of_order(row.q)?);
    let c = grm_plotkin_codes(&field, row.m, row.r, row.i)?;
    let (code, witness, predicted, orthogonality) = match row.side {
        Side::So => (&c.so, c.so_witness.as_deref(), c.predicted_so.distance, symplectic::is_so(&c.so)?),
        Side::Dc => (&c.dc, c.dc_witness.as_deref(), c.predicted_dc.distance, symplectic::is_dc(&c.dc)?),
    };
    let distance = certify_symplectic(code, witness, opts)?;
    let (n, k) = (code.len(), code.dim());
    let bound = symplectic::singleton_bound(n, k);
    let pass = (n, k) == (row.n, row.k)
        && distance.value == Some(row.d)
        && predicted == Some(row.d)
        && bound == row.bound
        && orthogonality;
    Ok(RowCheck { row: *row, n, k, predicted, distance, bound, orthogonality, pass })
}
