//! Plotkin-sum builders for symplectic SO / DC / self-dual codes.
//!
//! Each builder returns the constituent pair `(C1, C2)`, the code
//! `PP(C1, C2)`, its symplectic dual and the parameters predicted from the
//! constituent distances. Where a constituent's minimum-weight word is known
//! in closed form, a witness of the predicted distance is attached.

use std::sync::Arc;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::families::grm::Grm;
use crate::families::grs::nested_mds_pair;
use crate::families::hyperoval::hyperoval_generator;
use crate::gf::{Felt, Field};
use crate::matgf::Matrix;
use crate::plotkin::{self, CodeParams, ConstituentDistances};
use crate::rng::XorShift64Star;

#[derive(Clone, Debug)]
pub struct PlotkinConstruction {
    pub name: String,
    pub c1: LinearCode,
    pub c2: LinearCode,
    /// `PP(C1, C2)`, symplectic self-orthogonal for every builder here.
    pub so: LinearCode,
    /// `PP(C1, C2)^⊥s`, symplectic dual-containing.
    pub dc: LinearCode,
    pub predicted_so: CodeParams,
    pub predicted_dc: CodeParams,
    /// A word of `so` with symplectic weight equal to the predicted distance.
    pub so_witness: Option<Vec<Felt>>,
    /// Same for `dc`.
    pub dc_witness: Option<Vec<Felt>>,
}

fn assemble(name: String, c1: LinearCode, c2: LinearCode, d: ConstituentDistances) -> Result<PlotkinConstruction> {
    let so = plotkin::plotkin_sum(&c1, &c2)?;
    let dc = plotkin::symplectic_dual(&c1, &c2)?;
    let (predicted_so, predicted_dc) = plotkin::predicted_parameters(&c1, &c2, &d)?;
    Ok(PlotkinConstruction { name, c1, c2, so, dc, predicted_so, predicted_dc, so_witness: None, dc_witness: None })
}

/// Witness for `PP(A, B)` from minimum-weight words of `A` and `B`.
fn lift_witness(first: Option<(usize, Vec<Felt>)>, second: Option<(usize, Vec<Felt>)>) -> Option<Vec<Felt>> {
    match (first, second) {
        (Some((da, a)), Some((db, b))) => {
            Some(if da <= db { plotkin::lift_first(&a) } else { plotkin::lift_second(&b) })
        }
        (Some((_, a)), None) => Some(plotkin::lift_first(&a)),
        (None, Some((_, b))) => Some(plotkin::lift_second(&b)),
        (None, None) => None,
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(msg()))
    }
}

fn mds_distance(n: usize, k: usize) -> Option<usize> {
    (k > 0).then(|| n - k + 1)
}

/// `PP(C1, C2^⊥E)` for nested MDS codes `C1 ⊆ C2` of dimensions `k1 ≤ k2`,
/// allowing `k2 = n`.
fn nested_unchecked(field: &Arc<Field>, n: usize, k1: usize, k2: usize, name: String) -> Result<PlotkinConstruction> {
    let (c1, c2) = nested_mds_pair(field, n, k1, k2)?;
    let c2d = c2.dual();
    let d = ConstituentDistances {
        d1: mds_distance(n, k1),
        d2: mds_distance(n, n - k2),
        d1_dual: mds_distance(n, n - k1),
        d2_dual: mds_distance(n, k2),
    };
    assemble(name, c1, c2d, d)
}

/// Symplectic SO `[2n, n + k1 − k2, n − k1 + 1]` and DC `[2n, n + k2 − k1, n − k2 + 1]`
/// codes from nested MDS codes, for `q ≥ 3`, `2 ≤ n ≤ q + 1`,
/// `1 ≤ k1 ≤ k2 ≤ n − 1` and `k1 + k2 ≥ n`.
pub fn nested_mds_codes(field: &Arc<Field>, n: usize, k1: usize, k2: usize) -> Result<PlotkinConstruction> {
    let q = field.order() as usize;
    require(q >= 3, || format!("q = {q} must be at least 3"))?;
    require((2..=q + 1).contains(&n), || format!("n = {n} outside 2..={}", q + 1))?;
    require(1 <= k1 && k1 <= k2 && k2 < n, || format!("need 1 ≤ k1 ≤ k2 ≤ n − 1, got k1={k1} k2={k2}"))?;
    require(k1 + k2 >= n, || format!("need k1 + k2 ≥ n, got {k1} + {k2} < {n}"))?;
    nested_unchecked(field, n, k1, k2, format!("nested-mds q={q} n={n} k1={k1} k2={k2}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// SO dimension `2k`.
    Even,
    /// SO dimension `2k + 1`.
    Odd,
}

/// Symplectic MDS SO and DC codes of length `2n`:
/// even: `[2n, 2k, n − k + 1]` and `[2n, 2n − 2k, k + 1]` for `1 ≤ k ≤ ⌊n/2⌋`;
/// odd: `[2n, 2k + 1, n − k]` and `[2n, 2n − 2k − 1, k + 1]` for `0 ≤ k ≤ ⌊(n−1)/2⌋`.
///
/// `n ≤ q + 1` goes through nested MDS pairs. For `q = 2^m ≥ 4`, `n = q + 2`,
/// even parity and `k = 3`, the hyperoval route of [`hyperoval_mds_codes`] is used.
pub fn symplectic_mds_codes(field: &Arc<Field>, n: usize, k: usize, parity: Parity) -> Result<PlotkinConstruction> {
    let q = field.order() as usize;
    require(q >= 3, || format!("q = {q} must be at least 3"))?;
    if n == q + 2 && field.characteristic() == 2 && parity == Parity::Even && k == 3 {
        return hyperoval_mds_codes(field.degree(), &HyperovalSearch::default());
    }
    require((2..=q + 1).contains(&n), || format!("n = {n} outside 2..={}", q + 1))?;
    let (k1, k2) = match parity {
        Parity::Even => {
            require((1..=n / 2).contains(&k), || format!("even parity needs 1 ≤ k ≤ {}", n / 2))?;
            (k, n - k)
        }
        Parity::Odd => {
            require(k <= (n - 1) / 2, || format!("odd parity needs 0 ≤ k ≤ {}", (n - 1) / 2))?;
            (k + 1, n - k)
        }
    };
    let tag = if parity == Parity::Even { "even" } else { "odd" };
    nested_unchecked(field, n, k1, k2, format!("symplectic-mds q={q} n={n} k={k} {tag}"))
}

/// Symplectic MDS self-dual `[2n, n]` code for `2 ≤ n ≤ q + 1`.
pub fn mds_self_dual(field: &Arc<Field>, n: usize) -> Result<PlotkinConstruction> {
    let mut c = if n % 2 == 0 {
        symplectic_mds_codes(field, n, n / 2, Parity::Even)?
    } else {
        symplectic_mds_codes(field, n, (n - 1) / 2, Parity::Odd)?
    };
    c.name = format!("mds-self-dual q={} n={n}", field.order());
    Ok(c)
}

/// A weight-4 word of the dual of the hyperoval code, supported on its first four columns.
fn hyperoval_dual_weight4(a: &Matrix) -> Vec<Felt> {
    let k = a.select_cols(&[0, 1, 2, 3]).right_kernel();
    let mut w = vec![Felt::ZERO; a.cols()];
    w[..4].copy_from_slice(k.row(0));
    w
}

/// `PP(A, A^⊥E)` for the hyperoval code `A` over GF(2^m): a symplectic
/// self-dual `[2^{m+1} + 4, 2^m + 2, 4]` code.
pub fn hyperoval_self_dual(m: u32) -> Result<PlotkinConstruction> {
    let a = hyperoval_generator(m)?;
    let q = 1usize << m;
    let c1 = LinearCode::from_generator(&a);
    let c2 = c1.dual();
    let d = ConstituentDistances { d1: Some(q), d2: Some(4), d1_dual: Some(4), d2_dual: Some(q) };
    let mut c = assemble(format!("hyperoval-self-dual m={m}"), c1, c2, d)?;
    let w = plotkin::lift_second(&hyperoval_dual_weight4(&a));
    c.so_witness = Some(w.clone());
    c.dc_witness = Some(w);
    Ok(c)
}

/// Trial budget and seed for [`hyperoval_mds_codes`].
#[derive(Clone, Copy, Debug)]
pub struct HyperovalSearch {
    pub trials: u64,
    pub seed: u64,
}

impl Default for HyperovalSearch {
    fn default() -> Self {
        HyperovalSearch { trials: 1000, seed: 1 }
    }
}

/// Symplectic MDS SO `[2q + 4, 6, q]` and DC `[2q + 4, 2q − 2, 4]` codes over GF(q = 2^m).
///
/// Needs a `[q + 2, 3]` MDS code `B` orthogonal to the hyperoval code `A`;
/// then `C2 = B^⊥E` is a `[q + 2, q − 1]` MDS supercode of `A` and the SO
/// code is `PP(A, B)`. `B` is searched among monomial copies of `A`: for a
/// random coordinate permutation `σ`, column scalars `d` with
/// `Σ_i d_i a_i a_{σ(i)}ᵀ = 0` form a kernel, and a kernel vector without
/// zero entries gives `B` with columns `d_i a_{σ(i)}`.
pub fn hyperoval_mds_codes(m: u32, search: &HyperovalSearch) -> Result<PlotkinConstruction> {
    let a = hyperoval_generator(m)?;
    let f = a.field().clone();
    let q = f.order() as u64;
    let n = a.cols();
    let mut rng = XorShift64Star::new(search.seed);
    for _ in 0..search.trials {
        let mut sigma: Vec<usize> = (0..n).collect();
        rng.shuffle(&mut sigma);
        let mut sys = Matrix::zeros(&f, 9, n);
        for (i, &si) in sigma.iter().enumerate() {
            for r in 0..3 {
                for s in 0..3 {
                    sys.set(3 * r + s, i, f.mul(a.get(r, i), a.get(s, si)));
                }
            }
        }
        let ker = sys.right_kernel();
        if ker.rows() == 0 {
            continue;
        }
        for _ in 0..8 {
            let coeffs: Vec<Felt> = (0..ker.rows()).map(|_| Felt(rng.below(q) as u16)).collect();
            let d = Matrix::from_rows(&f, ker.rows(), &[coeffs])?.matmul(&ker)?;
            let d = d.row(0);
            if d.iter().any(|x| x.is_zero()) {
                continue;
            }
            let b = a.select_cols(&sigma).scale_cols(d)?;
            debug_assert!(a.mul_transpose(&b)?.is_zero());
            let c1 = LinearCode::from_generator(&a);
            let c2 = LinearCode::from_generator(&b);
            let qq = q as usize;
            let dist = ConstituentDistances { d1: Some(qq), d2: Some(qq), d1_dual: Some(4), d2_dual: Some(4) };
            let mut c = assemble(format!("hyperoval-mds m={m}"), c1, c2, dist)?;
            // PP(A, B)^⊥s = PP(B^⊥E, A^⊥E); a weight-4 word of A^⊥E lifts to (0, w).
            c.dc_witness = Some(plotkin::lift_second(&hyperoval_dual_weight4(&a)));
            return Ok(c);
        }
    }
    Err(Error::SearchExhausted {
        what: format!("[{n},3] MDS code orthogonal to the hyperoval code over GF({q})"),
        trials: search.trials,
    })
}

/// `PP(GRM(i, m), GRM(r, m))` and its symplectic dual
/// `PP(GRM(m(q−1)−r−1, m), GRM(m(q−1)−i−1, m))`, for `i ≤ m(q−1) − r − 1`.
pub fn grm_plotkin_codes(field: &Arc<Field>, m: u32, r: u32, i: u32) -> Result<PlotkinConstruction> {
    let q = field.order();
    let c2g = Grm::new(field, r, m)?;
    let c1g = Grm::new(field, i, m)?;
    let r_dual = c2g.dual().order();
    if i > r_dual {
        return Err(Error::ConditionViolated(format!("i = {i} exceeds m(q−1) − r − 1 = {r_dual}")));
    }
    let (c1d, c2d) = (c1g.dual(), c2g.dual());
    let d = ConstituentDistances {
        d1: Some(c1g.distance()),
        d2: Some(c2g.distance()),
        d1_dual: Some(c1d.distance()),
        d2_dual: Some(c2d.distance()),
    };
    let mut c = assemble(format!("grm-plotkin q={q} m={m} r={r} i={i}"), c1g.code(), c2g.code(), d)?;
    let word = |g: &Grm| Some((g.distance(), g.min_weight_codeword()));
    c.so_witness = lift_witness(word(&c1g), word(&c2g));
    c.dc_witness = lift_witness(word(&c2d), word(&c1d));
    Ok(c)
}
