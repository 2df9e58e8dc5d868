//! Generalized Reed–Solomon codes and nested MDS pairs.

use std::sync::Arc;

use crate::code::LinearCode;
use crate::enumerate::SearchOptions;
use crate::error::{Error, Result};
use crate::gf::{Felt, Field};
use crate::matgf::Matrix;
use crate::rng::XorShift64Star;

/// Evaluation points, column multipliers and dimension of a GRS code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrsSpec {
    pub alpha: Vec<Felt>,
    pub v: Vec<Felt>,
    pub k: usize,
}

impl GrsSpec {
    /// The first `n` field elements as points, all multipliers 1.
    pub fn standard(field: &Field, n: usize, k: usize) -> Result<GrsSpec> {
        if n > field.order() as usize {
            return Err(Error::UnsupportedLength {
                q: field.order(),
                n,
                reason: "more points than field elements".into(),
            });
        }
        Ok(GrsSpec { alpha: field.elements().take(n).collect(), v: vec![Felt::ONE; n], k })
    }

    fn validate(&self, field: &Field) -> Result<()> {
        let n = self.alpha.len();
        if self.v.len() != n {
            return Err(Error::LengthMismatch { left: n, right: self.v.len() });
        }
        if self.k == 0 || self.k > n {
            return Err(Error::ParameterOutOfRange(format!("GRS dimension {} for length {n}", self.k)));
        }
        if self.alpha.iter().chain(&self.v).any(|x| x.repr() >= field.order()) {
            return Err(Error::ParameterOutOfRange("entry outside the field".into()));
        }
        let mut seen = vec![false; field.order() as usize];
        for a in &self.alpha {
            if std::mem::replace(&mut seen[a.0 as usize], true) {
                return Err(Error::DuplicatePoints);
            }
        }
        if self.v.iter().any(|x| x.is_zero()) {
            return Err(Error::ZeroMultiplier);
        }
        Ok(())
    }
}

/// Rows `(v_j · α_j^i)_j` for `i = 0..k`.
pub fn grs_generator(field: &Arc<Field>, spec: &GrsSpec) -> Result<Matrix> {
    spec.validate(field)?;
    let n = spec.alpha.len();
    let mut g = Matrix::zeros(field, spec.k, n);
    for i in 0..spec.k {
        for j in 0..n {
            g.set(i, j, field.mul(spec.v[j], field.pow(spec.alpha[j], i as u64)));
        }
    }
    Ok(g)
}

/// A codeword of weight `n − k + 1`: the evaluation of `∏_{j<k−1} (x − α_j)`.
pub fn grs_min_weight_word(field: &Arc<Field>, spec: &GrsSpec) -> Result<Vec<Felt>> {
    spec.validate(field)?;
    let roots = &spec.alpha[..spec.k - 1];
    Ok(spec
        .alpha
        .iter()
        .zip(&spec.v)
        .map(|(&a, &v)| roots.iter().fold(v, |acc, &r| field.mul(acc, field.sub(a, r))))
        .collect())
}

pub fn grs_code(field: &Arc<Field>, spec: &GrsSpec) -> Result<LinearCode> {
    Ok(LinearCode::from_generator(&grs_generator(field, spec)?))
}

/// Multipliers `v′` with `GRS_k(α, v)^⊥E = GRS_{n−k}(α, v′)`:
/// `v′_j = (v_j · ∏_{l≠j} (α_j − α_l))^{-1}`.
pub fn grs_dual_multipliers(field: &Field, alpha: &[Felt], v: &[Felt]) -> Result<Vec<Felt>> {
    alpha
        .iter()
        .zip(v)
        .enumerate()
        .map(|(j, (&aj, &vj))| {
            let prod = alpha
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != j)
                .fold(vj, |acc, (_, &al)| field.mul(acc, field.sub(aj, al)));
            field.inv(prod).map_err(|_| if vj.is_zero() { Error::ZeroMultiplier } else { Error::DuplicatePoints })
        })
        .collect()
}

/// Evaluates polynomials of degree ≤ `deg` (coefficient `i` = `x^i`) at the
/// `q + 1` points of the projective line: `(x : 1)` in element order, then `(1 : 0)`.
fn eval_projective(field: &Arc<Field>, polys: &[Vec<Felt>], deg: usize) -> Matrix {
    let q = field.order() as usize;
    let mut g = Matrix::zeros(field, polys.len(), q + 1);
    for (r, p) in polys.iter().enumerate() {
        for x in field.elements() {
            let v = p.iter().rev().fold(Felt::ZERO, |acc, &c| field.add(field.mul(acc, x), c));
            g.set(r, x.0 as usize, v);
        }
        g.set(r, q, p.get(deg).copied().unwrap_or(Felt::ZERO));
    }
    g
}

fn poly_mul(field: &Field, a: &[Felt], b: &[Felt]) -> Vec<Felt> {
    let mut out = vec![Felt::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    out
}

/// The first monic polynomial of degree `d ≥ 2` without roots in GF(q),
/// scanning lower coefficients in representation order.
pub fn rootless_polynomial(field: &Field, d: usize) -> Vec<Felt> {
    assert!(d >= 2, "linear polynomials always have a root");
    let q = u64::from(field.order());
    let mut t: u64 = 0;
    loop {
        let mut p = Vec::with_capacity(d + 1);
        let mut rest = t;
        for _ in 0..d {
            p.push(Felt((rest % q) as u16));
            rest /= q;
        }
        p.push(Felt::ONE);
        let has_root = field
            .elements()
            .any(|x| p.iter().rev().fold(Felt::ZERO, |acc, &c| field.add(field.mul(acc, x), c)).is_zero());
        if !has_root {
            return p;
        }
        t += 1;
    }
}

fn monomial(i: usize) -> Vec<Felt> {
    let mut p = vec![Felt::ZERO; i + 1];
    p[i] = Felt::ONE;
    p
}

/// Doubly-extended Reed–Solomon code: forms of degree `k − 1` on the projective line.
pub fn extended_rs(field: &Arc<Field>, k: usize) -> Result<LinearCode> {
    let n = field.order() as usize + 1;
    if k == 0 || k > n {
        return Err(Error::ParameterOutOfRange(format!("dimension {k} for length {n}")));
    }
    if k == n {
        return Ok(LinearCode::full(field, n));
    }
    let polys: Vec<Vec<Felt>> = (0..k).map(monomial).collect();
    Ok(LinearCode::from_generator(&eval_projective(field, &polys, k - 1)))
}

/// Nested Hamming-MDS codes `C1 ⊆ C2` of length `n` and dimensions `k1 ≤ k2`.
///
/// For `n ≤ q` both are GRS codes on the first `n` field elements. For
/// `n = q + 1`, `C2` is the doubly-extended RS code of dimension `k2` and `C1`
/// is `h · (forms of degree k1 − 1)` for a form `h` of degree `k2 − k1` with
/// no zeros on the projective line; when `k2 − k1 = 1` no such `h` exists and
/// a seeded random search for an MDS hyperplane of `C2` is used instead.
pub fn nested_mds_pair(field: &Arc<Field>, n: usize, k1: usize, k2: usize) -> Result<(LinearCode, LinearCode)> {
    let q = field.order() as usize;
    if n < 2 || n > q + 1 {
        return Err(Error::UnsupportedLength {
            q: q as u32, n, reason: "nested MDS pairs need 2 ≤ n ≤ q + 1".into()
        });
    }
    if k1 == 0 || k1 > k2 || k2 > n {
        return Err(Error::ParameterOutOfRange(format!("need 1 ≤ k1 ≤ k2 ≤ n, got k1={k1} k2={k2} n={n}")));
    }
    if n <= q {
        let c1 = grs_code(field, &GrsSpec::standard(field, n, k1)?)?;
        let c2 = grs_code(field, &GrsSpec::standard(field, n, k2)?)?;
        return Ok((c1, c2));
    }
    let c2 = extended_rs(field, k2)?;
    let d = k2 - k1;
    let c1 = match d {
        0 => c2.clone(),
        1 => mds_hyperplane(field, &c2)?,
        _ => {
            let h = rootless_polynomial(field, d);
            let polys: Vec<Vec<Felt>> = (0..k1).map(|i| poly_mul(field, &h, &monomial(i))).collect();
            LinearCode::from_generator(&eval_projective(field, &polys, k2 - 1))
        }
    };
    Ok((c1, c2))
}

const HYPERPLANE_TRIALS: u64 = 256;

/// A codimension-one subcode of `c2` that is again MDS.
fn mds_hyperplane(field: &Arc<Field>, c2: &LinearCode) -> Result<LinearCode> {
    let (n, k2) = (c2.len(), c2.dim());
    let q = u64::from(field.order());
    let mut rng = XorShift64Star::new(1);
    for _ in 0..HYPERPLANE_TRIALS {
        let functional: Vec<Felt> = (0..k2).map(|_| Felt(rng.below(q) as u16)).collect();
        let f = Matrix::from_rows(field, k2, &[functional])?;
        let info = f.right_kernel();
        if info.rows() != k2 - 1 {
            continue;
        }
        let c1 = LinearCode::from_generator(&info.matmul(c2.generator())?);
        if c1.min_hamming_distance(&SearchOptions::default())?.weight == n - c1.dim() + 1 {
            return Ok(c1);
        }
    }
    Err(Error::SearchExhausted {
        what: format!("MDS [{n},{}] subcode of an extended RS code", k2 - 1),
        trials: HYPERPLANE_TRIALS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Arc<Field> {
        Arc::new(Field::of_order(q).unwrap())
    }

    fn dist(c: &LinearCode) -> usize {
        c.min_hamming_distance(&SearchOptions::default()).unwrap().weight
    }

    #[test]
    fn grs_examples() {
        let f = gf(5);
        let c = grs_code(&f, &GrsSpec::standard(&f, 5, 2).unwrap()).unwrap();
        assert_eq!((c.len(), c.dim(), dist(&c)), (5, 2, 4));
        let full = grs_code(&f, &GrsSpec::standard(&f, 4, 4).unwrap()).unwrap();
        assert_eq!(full, LinearCode::full(&f, 4));
        let rep = grs_code(&f, &GrsSpec::standard(&f, 5, 1).unwrap()).unwrap();
        assert_eq!(dist(&rep), 5);
    }

    #[test]
    fn grs_rejects_bad_specs() {
        let f = gf(5);
        let dup = GrsSpec { alpha: vec![Felt(1), Felt(1)], v: vec![Felt(1); 2], k: 1 };
        assert_eq!(grs_code(&f, &dup), Err(Error::DuplicatePoints));
        let zero = GrsSpec { alpha: vec![Felt(1), Felt(2)], v: vec![Felt(1), Felt(0)], k: 1 };
        assert_eq!(grs_code(&f, &zero), Err(Error::ZeroMultiplier));
        assert!(matches!(GrsSpec::standard(&f, 6, 2), Err(Error::UnsupportedLength { .. })));
    }

    #[test]
    fn grs_codes_are_mds_with_grs_duals() {
        for q in [3u32, 4, 5, 7, 8, 9] {
            let f = gf(q);
            for n in 2..=(q as usize).min(8) {
                // Multipliers 1, g, g², ... exercise the general dual formula.
                let alpha: Vec<Felt> = f.elements().skip(q as usize - n).collect();
                let v: Vec<Felt> = (0..n).map(|j| f.exp(j as u64)).collect();
                let vd = grs_dual_multipliers(&f, &alpha, &v).unwrap();
                for k in 1..n {
                    let c = grs_code(&f, &GrsSpec { alpha: alpha.clone(), v: v.clone(), k }).unwrap();
                    assert_eq!(dist(&c), n - k + 1, "q={q} n={n} k={k}");
                    let d = grs_code(&f, &GrsSpec { alpha: alpha.clone(), v: vd.clone(), k: n - k }).unwrap();
                    assert_eq!(c.dual(), d);
                }
            }
        }
    }

    #[test]
    fn nested_pairs() {
        let f8 = gf(8);
        let (c1, c2) = nested_mds_pair(&f8, 3, 1, 2).unwrap();
        assert!(c1.is_subcode(&c2).unwrap());
        assert_eq!(c1.intersection_dim(&c2).unwrap(), 1);

        let f5 = gf(5);
        let (c1, c2) = nested_mds_pair(&f5, 4, 1, 3).unwrap();
        assert_eq!(c1.intersection_dim(&c2).unwrap(), 1);
        let (a, b) = nested_mds_pair(&f5, 4, 2, 2).unwrap();
        assert_eq!(a, b);
        assert!(matches!(nested_mds_pair(&f5, 7, 1, 2), Err(Error::UnsupportedLength { .. })));
        assert!(matches!(nested_mds_pair(&f5, 4, 3, 2), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn projective_line_pairs_are_nested_and_mds() {
        for q in [3u32, 4, 5, 8] {
            let f = gf(q);
            let n = q as usize + 1;
            for k2 in 1..=n {
                for k1 in 1..=k2 {
                    let res = nested_mds_pair(&f, n, k1, k2);
                    if (k1, k2) == (1, 2) {
                        // Every word of the [q+1, 2] code has a zero, so no MDS line exists.
                        assert!(matches!(res, Err(Error::SearchExhausted { .. })));
                        continue;
                    }
                    if k2 == k1 + 1 && matches!(res, Err(Error::SearchExhausted { .. })) {
                        continue;
                    }
                    let (c1, c2) = res.unwrap();
                    assert_eq!((c1.dim(), c2.dim()), (k1, k2));
                    assert!(c1.is_subcode(&c2).unwrap());
                    if crate::enumerate::projective_classes(q, k2) <= 300_000 {
                        assert_eq!(dist(&c2), n - k2 + 1, "q={q} k2={k2}");
                        assert_eq!(dist(&c1), n - k1 + 1, "q={q} k1={k1} k2={k2}");
                    }
                }
            }
        }
    }

    #[test]
    fn rootless_polynomials() {
        let f = gf(8);
        for d in 2..6 {
            let p = rootless_polynomial(&f, d);
            assert_eq!(p.len(), d + 1);
            assert!(f.elements().all(|x| !p.iter().rev().fold(Felt::ZERO, |a, &c| f.add(f.mul(a, x), c)).is_zero()));
        }
    }

    #[test]
    fn min_weight_word_is_a_codeword_of_singleton_weight() {
        let f = Arc::new(Field::of_order(7).unwrap());
        for k in 1..=7 {
            let spec = GrsSpec::standard(&f, 7, k).unwrap();
            let w = grs_min_weight_word(&f, &spec).unwrap();
            assert!(grs_code(&f, &spec).unwrap().contains(&w).unwrap());
            assert_eq!(crate::enumerate::hamming_weight(&w), 7 - k + 1);
        }
    }
}
