//! Generalized Reed–Muller codes `GRM(r, m)` over GF(q).
//!
//! Points of GF(q)^m are listed lexicographically with the first coordinate
//! most significant and field elements ordered by representation.

use std::sync::Arc;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Felt, Field};
use crate::matgf::Matrix;

/// Largest supported code length `q^m`.
pub const MAX_LENGTH: u64 = 1 << 16;

fn check_order(q: u32, r: u32, m: u32) -> Result<()> {
    if m == 0 || r >= m * (q - 1) {
        return Err(Error::OrderOutOfRange { q, m, r });
    }
    Ok(())
}

fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// `Σ_j (−1)^j C(m, j) C(m + r − jq, r − jq)`.
pub fn grm_dimension(q: u32, r: u32, m: u32) -> Result<usize> {
    check_order(q, r, m)?;
    let (q, r, m) = (i64::from(q), i64::from(r), i64::from(m));
    let mut total: i128 = 0;
    for j in 0..=m {
        if r - j * q < 0 {
            break;
        }
        let term = binom(m, j) * binom(m + r - j * q, r - j * q);
        total += if j % 2 == 0 { term } else { -term };
    }
    Ok(total as usize)
}

/// `(b + 1) q^a` where `m(q − 1) − r = a(q − 1) + b`, `0 ≤ b < q − 1`.
pub fn grm_distance(q: u32, r: u32, m: u32) -> Result<usize> {
    check_order(q, r, m)?;
    let s = m * (q - 1) - r;
    let (a, b) = (s / (q - 1), s % (q - 1));
    Ok((b as usize + 1) * (q as usize).pow(a))
}

/// `m(q − 1) − r − 1`, the order of the Euclidean dual.
pub fn grm_dual_order(q: u32, r: u32, m: u32) -> Result<u32> {
    check_order(q, r, m)?;
    Ok(m * (q - 1) - r - 1)
}

/// `GRM(r, m)` over a fixed field.
#[derive(Clone, Debug)]
pub struct Grm {
    field: Arc<Field>,
    r: u32,
    m: u32,
}

impl Grm {
    pub fn new(field: &Arc<Field>, r: u32, m: u32) -> Result<Grm> {
        let q = field.order();
        check_order(q, r, m)?;
        if u64::from(q).checked_pow(m).map_or(true, |n| n > MAX_LENGTH) {
            return Err(Error::ParameterOutOfRange(format!("GRM length {q}^{m} exceeds {MAX_LENGTH}")));
        }
        Ok(Grm { field: field.clone(), r, m })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        (self.field.order() as usize).pow(self.m)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dimension(&self) -> usize {
        grm_dimension(self.field.order(), self.r, self.m).expect("validated")
    }

    pub fn distance(&self) -> usize {
        grm_distance(self.field.order(), self.r, self.m).expect("validated")
    }

    pub fn dual(&self) -> Grm {
        Grm {
            field: self.field.clone(),
            r: grm_dual_order(self.field.order(), self.r, self.m).expect("validated"),
            m: self.m,
        }
    }

    /// Exponent vectors `e` with `e_i ≤ q − 1` and `Σ e_i ≤ r`, lexicographic.
    pub fn monomials(&self) -> Vec<Vec<u32>> {
        let q = self.field.order();
        let m = self.m as usize;
        let mut out = Vec::new();
        let mut e = vec![0u32; m];
        loop {
            if e.iter().sum::<u32>() <= self.r {
                out.push(e.clone());
            }
            let mut i = m;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                e[i] += 1;
                if e[i] < q {
                    break;
                }
                e[i] = 0;
            }
        }
    }

    /// Coordinates of point `t`.
    pub fn point(&self, t: usize) -> Vec<Felt> {
        let q = self.field.order() as usize;
        let m = self.m as usize;
        let mut out = vec![Felt::ZERO; m];
        let mut rest = t;
        for i in (0..m).rev() {
            out[i] = Felt((rest % q) as u16);
            rest /= q;
        }
        out
    }

    /// Monomial evaluations at all points, one row per monomial.
    pub fn generator(&self) -> Matrix {
        let f = &self.field;
        let q = f.order() as usize;
        let m = self.m as usize;
        let mons = self.monomials();
        let n = self.len();
        // powers[v * q + x] = x^v
        let mut powers = vec![Felt::ONE; q * q];
        for v in 1..q {
            for x in f.elements() {
                powers[v * q + x.0 as usize] = f.mul(powers[(v - 1) * q + x.0 as usize], x);
            }
        }
        let mut g = Matrix::zeros(f, mons.len(), n);
        let mut p = vec![0usize; m];
        for t in 0..n {
            for (row, e) in mons.iter().enumerate() {
                let v = e.iter().zip(&p).fold(Felt::ONE, |acc, (&ei, &xi)| f.mul(acc, powers[ei as usize * q + xi]));
                g.set(row, t, v);
            }
            for i in (0..m).rev() {
                p[i] += 1;
                if p[i] < q {
                    break;
                }
                p[i] = 0;
            }
        }
        g
    }

    pub fn code(&self) -> LinearCode {
        LinearCode::from_generator(&self.generator())
    }

    /// A codeword of weight exactly [`Grm::distance`].
    ///
    /// With `r = u(q − 1) + s`, `0 ≤ s < q − 1`, evaluates
    /// `∏_{j<u} (1 − x_j^{q−1}) · ∏_{t=1..s} (x_u − c_t)` for the first `s`
    /// nonzero elements `c_t`. The first factor keeps only points with
    /// `x_0 = … = x_{u−1} = 0`; the second removes `s` values of `x_u`, leaving
    /// `(q − s) q^{m−u−1}` nonzero positions.
    pub fn min_weight_codeword(&self) -> Vec<Felt> {
        let f = &self.field;
        let q = f.order();
        let (u, s) = ((self.r / (q - 1)) as usize, self.r % (q - 1));
        let roots: Vec<Felt> = f.nonzero().take(s as usize).collect();
        let factor: Vec<Felt> =
            f.elements().map(|x| roots.iter().fold(Felt::ONE, |acc, &c| f.mul(acc, f.sub(x, c)))).collect();
        // Points with x_0 = … = x_{u−1} = 0 are the first q^{m−u}; x_u is the
        // leading digit of the offset within that block.
        let block = (q as usize).pow(self.m - u as u32);
        let stride = block / q as usize;
        let mut word = vec![Felt::ZERO; self.len()];
        for (t, w) in word[..block].iter_mut().enumerate() {
            *w = factor[t / stride];
        }
        word
    }

    /// Coefficients of the reduced polynomial (every exponent below `q`)
    /// whose evaluations are `word`, indexed like the points.
    pub fn interpolate(&self, word: &[Felt]) -> Result<Vec<Felt>> {
        let n = self.len();
        if word.len() != n {
            return Err(Error::LengthMismatch { left: word.len(), right: n });
        }
        let f = &self.field;
        let q = f.order() as usize;
        let order = q as u64 - 1;
        let mut c = word.to_vec();
        let mut line = vec![Felt::ZERO; q];
        // Along each axis: c_0 = v(0), c_e = −Σ_{x≠0} v(x) x^{−e} for
        // 0 < e < q − 1, and c_{q−1} = −Σ_x v(x).
        let mut stride = 1;
        while stride < n {
            for base in 0..n {
                if (base / stride) % q != 0 {
                    continue;
                }
                for (x, l) in line.iter_mut().enumerate() {
                    *l = c[base + x * stride];
                }
                let total = line.iter().fold(Felt::ZERO, |acc, &v| f.add(acc, v));
                c[base + (q - 1) * stride] = f.neg(total);
                for e in 1..q - 1 {
                    c[base + e * stride] = Felt::ZERO;
                }
                for (x, &v) in line.iter().enumerate().skip(1) {
                    let Some(lv) = f.log(v) else { continue };
                    let lx = f.log(Felt(x as u16)).expect("x is nonzero");
                    // v · x^{−e} = g^{lv − e·lx}, stepped through e.
                    let step = (order - u64::from(lx)) % order;
                    let mut k = u64::from(lv);
                    for e in 1..q - 1 {
                        k += step;
                        if k >= order {
                            k -= order;
                        }
                        let slot = &mut c[base + e * stride];
                        *slot = f.add(*slot, f.exp(k));
                    }
                }
                for e in 1..q - 1 {
                    c[base + e * stride] = f.neg(c[base + e * stride]);
                }
            }
            stride *= q;
        }
        Ok(c)
    }

    /// Membership by interpolation: every monomial of the reduced polynomial
    /// has total degree at most `r`.
    pub fn contains(&self, word: &[Felt]) -> Result<bool> {
        let c = self.interpolate(word)?;
        let q = self.field.order() as usize;
        Ok(c.iter().enumerate().all(|(t, v)| {
            if v.is_zero() {
                return true;
            }
            let (mut rest, mut deg) = (t, 0usize);
            while rest > 0 {
                deg += rest % q;
                rest /= q;
            }
            deg <= self.r as usize
        }))
    }
}
