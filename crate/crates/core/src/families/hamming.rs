//! q-ary Hamming codes and parity extension.

use std::sync::Arc;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Felt, Field};
use crate::matgf::Matrix;

/// The Hamming code of redundancy `r` over `field`: length `(q^r − 1)/(q − 1)`,
/// dimension `n − r`, distance 3. Columns of the parity-check matrix are the
/// points of `PG(r − 1, q)` with leading nonzero entry 1.
pub fn hamming_code(field: &Arc<Field>, r: u32) -> Result<LinearCode> {
    let q = u64::from(field.order());
    if r < 2 {
        return Err(Error::ParameterOutOfRange(format!("redundancy r = {r} must be at least 2")));
    }
    let n = (q
        .checked_pow(r)
        .filter(|&v| v <= 1 << 16)
        .ok_or_else(|| Error::ParameterOutOfRange(format!("q^r too large for r = {r}")))?
        - 1)
        / (q - 1);
    let n = n as usize;
    let r = r as usize;
    let mut h = Matrix::zeros(field, r, n);
    let mut col = 0;
    for lead in 0..r {
        let tail = r - lead - 1;
        for t in 0..q.pow(tail as u32) {
            h.set(lead, col, Felt::ONE);
            let mut t = t;
            for row in lead + 1..r {
                h.set(row, col, Felt((t % q) as u16));
                t /= q;
            }
            col += 1;
        }
    }
    Ok(LinearCode::from_parity_check(&h))
}

/// Appends the coordinate `−Σ c_i` to every codeword.
pub fn extend_by_parity(code: &LinearCode) -> LinearCode {
    let f = code.field();
    let g = code.generator();
    let mut m = Matrix::zeros(f, g.rows(), g.cols() + 1);
    for (i, row) in g.row_iter().enumerate() {
        let mut s = Felt::ZERO;
        for (j, &x) in row.iter().enumerate() {
            m.set(i, j, x);
            s = f.add(s, x);
        }
        m.set(i, g.cols(), f.neg(s));
    }
    LinearCode::from_generator(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::SearchOptions;

    #[test]
    fn parameters() {
        for (q, r, n) in [(2, 3, 7), (2, 4, 15), (3, 2, 4), (3, 3, 13), (4, 2, 5), (5, 2, 6)] {
            let f = Arc::new(Field::of_order(q).unwrap());
            let c = hamming_code(&f, r).unwrap();
            assert_eq!((c.len(), c.dim()), (n, n - r as usize));
            assert_eq!(c.min_hamming_distance(&SearchOptions::default()).unwrap().weight, 3);
        }
    }

    #[test]
    fn extended_binary_hamming_is_self_dual() {
        let f = Arc::new(Field::of_order(2).unwrap());
        let e = extend_by_parity(&hamming_code(&f, 3).unwrap());
        assert_eq!((e.len(), e.dim()), (8, 4));
        assert_eq!(e.dual(), e);
        assert_eq!(e.min_hamming_distance(&SearchOptions::default()).unwrap().weight, 4);
    }

    #[test]
    fn rejects_small_redundancy() {
        let f = Arc::new(Field::of_order(2).unwrap());
        assert!(matches!(hamming_code(&f, 1), Err(Error::ParameterOutOfRange(_))));
    }
}
