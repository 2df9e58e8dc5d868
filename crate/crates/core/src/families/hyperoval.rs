//! The `[q + 2, 3, q]` hyperoval code over GF(2^m).

use std::sync::Arc;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Felt, Field};
use crate::matgf::Matrix;

/// Generator with columns `(1, a, a²)` for every `a` in element order,
/// followed by `(0, 1, 0)` and `(0, 0, 1)`.
pub fn hyperoval_generator(m: u32) -> Result<Matrix> {
    if m < 2 {
        return Err(Error::ParameterOutOfRange(format!("hyperoval codes need m ≥ 2, got {m}")));
    }
    let f = Arc::new(Field::new(2, m)?);
    let q = f.order() as usize;
    let mut g = Matrix::zeros(&f, 3, q + 2);
    for a in f.elements() {
        let c = a.0 as usize;
        g.set(0, c, Felt::ONE);
        g.set(1, c, a);
        g.set(2, c, f.mul(a, a));
    }
    g.set(1, q, Felt::ONE);
    g.set(2, q + 1, Felt::ONE);
    Ok(g)
}

pub fn hyperoval_code(m: u32) -> Result<LinearCode> {
    Ok(LinearCode::from_generator(&hyperoval_generator(m)?))
}
