//! The Plotkin sum `{(u, u + v) : u ∈ C1, v ∈ C2}` and its SO / LCD criteria.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::Felt;
use crate::matgf::{self, Matrix};

fn check_pair(c1: &LinearCode, c2: &LinearCode) -> Result<()> {
    matgf::same_field(c1.field(), c2.field())?;
    if c1.len() != c2.len() {
        return Err(Error::LengthMismatch { left: c1.len(), right: c2.len() });
    }
    Ok(())
}

/// Generator `[[G1, G1], [O, G2]]`.
pub fn generator(c1: &LinearCode, c2: &LinearCode) -> Result<Matrix> {
    check_pair(c1, c2)?;
    let (g1, g2) = (c1.generator(), c2.generator());
    let top = g1.hconcat(g1)?;
    let bottom = Matrix::zeros(c1.field(), g2.rows(), c1.len()).hconcat(g2)?;
    top.vconcat(&bottom)
}

pub fn plotkin_sum(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
    Ok(LinearCode::from_generator(&generator(c1, c2)?))
}

/// Parity check `[[H1, O], [−H2, H2]]`.
pub fn parity_check(c1: &LinearCode, c2: &LinearCode) -> Result<Matrix> {
    check_pair(c1, c2)?;
    let (h1, h2) = (c1.parity_check(), c2.parity_check());
    let top = h1.hconcat(&Matrix::zeros(c1.field(), h1.rows(), c1.len()))?;
    let bottom = h2.neg().hconcat(&h2)?;
    top.vconcat(&bottom)
}

/// `PP(C1, C2)^⊥s = PP(C2^⊥E, C1^⊥E)`.
pub fn symplectic_dual(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
    check_pair(c1, c2)?;
    plotkin_sum(&c2.dual(), &c1.dual())
}

/// `C1 ⊆ C2^⊥E`, which holds exactly when `PP(C1, C2)` is symplectic SO.
pub fn so_criterion(c1: &LinearCode, c2: &LinearCode) -> Result<bool> {
    check_pair(c1, c2)?;
    c1.is_subcode(&c2.dual())
}

/// `C1 ∩ C2^⊥E = {0}` and `k1 = k2`, which holds exactly when `PP(C1, C2)` is symplectic LCD.
pub fn lcd_criterion(c1: &LinearCode, c2: &LinearCode) -> Result<bool> {
    check_pair(c1, c2)?;
    Ok(c1.dim() == c2.dim() && c1.intersection_dim(&c2.dual())? == 0)
}

/// `(u, u)`, the image of `u ∈ C1`.
pub fn lift_first(u: &[Felt]) -> Vec<Felt> {
    let mut out = u.to_vec();
    out.extend_from_slice(u);
    out
}

/// `(0, v)`, the image of `v ∈ C2`.
pub fn lift_second(v: &[Felt]) -> Vec<Felt> {
    let mut out = vec![Felt::ZERO; v.len()];
    out.extend_from_slice(v);
    out
}

/// `[len, dim, d]_q`, with `d` absent when unknown or undefined (zero code).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub len: usize,
    pub dim: usize,
    pub distance: Option<usize>,
    pub q: u32,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.distance {
            Some(d) => write!(f, "[{},{},{}]_{}", self.len, self.dim, d, self.q),
            None => write!(f, "[{},{},?]_{}", self.len, self.dim, self.q),
        }
    }
}

fn min_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Distances of the constituent codes of a Plotkin pair; `None` for a zero code.
#[derive(Clone, Copy, Debug, Default)]
pub struct ConstituentDistances {
    pub d1: Option<usize>,
    pub d2: Option<usize>,
    pub d1_dual: Option<usize>,
    pub d2_dual: Option<usize>,
}

/// Symplectic parameters of `PP(C1, C2)` and of its symplectic dual:
/// `[2n, k1 + k2, min(d1, d2)]` and `[2n, 2n − k1 − k2, min(d1⊥, d2⊥)]`.
pub fn predicted_parameters(
    c1: &LinearCode,
    c2: &LinearCode,
    d: &ConstituentDistances,
) -> Result<(CodeParams, CodeParams)> {
    check_pair(c1, c2)?;
    let len = 2 * c1.len();
    let k = c1.dim() + c2.dim();
    let q = c1.field().order();
    let pp = CodeParams { len, dim: k, distance: if k == 0 { None } else { min_opt(d.d1, d.d2) }, q };
    let dual =
        CodeParams { len, dim: len - k, distance: if k == len { None } else { min_opt(d.d1_dual, d.d2_dual) }, q };
    Ok((pp, dual))
}
