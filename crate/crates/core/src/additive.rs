//! Additive codes over GF(q²) and the isometry `φ: GF(q)^{2n} → GF(q²)^n`,
//! `φ(x)_j = x_j + ω x_{n+j}`, carrying symplectic weight to Hamming weight.

use std::sync::Arc;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{ExtTower, Felt};
use crate::symplectic;

pub fn phi_vec(x: &[Felt], tower: &ExtTower) -> Result<Vec<Felt>> {
    if x.len() % 2 == 1 {
        return Err(Error::OddLength(x.len()));
    }
    let q = tower.base().order();
    if x.iter().any(|c| c.repr() >= q) {
        return Err(Error::FieldMismatch);
    }
    let n = x.len() / 2;
    Ok((0..n).map(|j| tower.compose(x[j], x[n + j])).collect())
}

/// Inverse of [`phi_vec`].
pub fn phi_inverse(u: &[Felt], tower: &ExtTower) -> Vec<Felt> {
    let n = u.len();
    let mut x = vec![Felt::ZERO; 2 * n];
    for (j, &c) in u.iter().enumerate() {
        let (a, b) = tower.decompose(c);
        x[j] = a;
        x[n + j] = b;
    }
    x
}

/// `Σ_i (u_i^q v_i − u_i v_i^q) / (ω − ω^q)`.
///
/// This normalization makes `⟨x, y⟩_s = ⟨φ(x), φ(y)⟩_a` hold exactly; the
/// opposite sign differs from it by −1, which matters only in odd characteristic.
pub fn alternating_form(u: &[Felt], v: &[Felt], tower: &ExtTower) -> Result<Felt> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    let f = tower.ext();
    let q = u64::from(tower.base().order());
    let w = tower.omega();
    let denom = f.sub(w, f.pow(w, q));
    let mut acc = Felt::ZERO;
    for (&a, &b) in u.iter().zip(v) {
        acc = f.add(acc, f.sub(f.mul(f.pow(a, q), b), f.mul(a, f.pow(b, q))));
    }
    f.div(acc, denom)
}

/// An `(n, q^k)` additive code over GF(q²) given by `k` GF(q)-independent
/// generators, optionally remembering the symplectic code it is the φ-image of.
#[derive(Clone, Debug)]
pub struct AdditiveCode {
    n: usize,
    tower: Arc<ExtTower>,
    gens: Vec<Vec<Felt>>,
    preimage: Option<LinearCode>,
}

impl AdditiveCode {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// GF(q)-dimension; the code has `q^k` words.
    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    pub fn tower(&self) -> &Arc<ExtTower> {
        &self.tower
    }

    pub fn generators(&self) -> &[Vec<Felt>] {
        &self.gens
    }

    pub fn preimage(&self) -> Option<&LinearCode> {
        self.preimage.as_ref()
    }

    /// Every word, by GF(q)-combinations of the generators.
    pub fn words(&self) -> Vec<Vec<Felt>> {
        let base = self.tower.base();
        let ext = self.tower.ext();
        let mut out = vec![vec![Felt::ZERO; self.n]];
        for g in &self.gens {
            let mut next = Vec::with_capacity(out.len() * base.order() as usize);
            for c in base.elements() {
                let e = self.tower.embed(c);
                for w in &out {
                    let mut w = w.clone();
                    ext.axpy(&mut w, e, g);
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }
}

/// The additive code `φ(C)` for a code `C` of even length over GF(q).
pub fn phi_code(code: &LinearCode, tower: &Arc<ExtTower>) -> Result<AdditiveCode> {
    if code.len() % 2 == 1 {
        return Err(Error::OddLength(code.len()));
    }
    if **code.field() != **tower.base() {
        return Err(Error::FieldMismatch);
    }
    let gens = code.generator().row_iter().map(|r| phi_vec(r, tower)).collect::<Result<_>>()?;
    Ok(AdditiveCode { n: code.len() / 2, tower: tower.clone(), gens, preimage: Some(code.clone()) })
}

/// The dual under the alternating form, `φ(preimage^⊥s)`.
pub fn additive_dual(a: &AdditiveCode) -> Result<AdditiveCode> {
    let pre = a.preimage.as_ref().ok_or(Error::NotPhiImage)?;
    phi_code(&symplectic::dual(pre)?, &a.tower)
}

/// Whether `A ∩ A^⊥a = {0}`, decided on the symplectic preimage.
pub fn is_trh_acd(a: &AdditiveCode) -> Result<bool> {
    let pre = a.preimage.as_ref().ok_or(Error::NotPhiImage)?;
    if pre.dim() == 0 {
        return Ok(true);
    }
    symplectic::is_lcd(pre)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{hamming_weight, SearchOptions};
    use crate::gf::Field;
    use crate::matgf::Matrix;
    use proptest::prelude::*;

    fn tower(q: u32) -> Arc<ExtTower> {
        Arc::new(ExtTower::new(Arc::new(Field::of_order(q).unwrap())).unwrap())
    }

    #[test]
    fn phi_examples() {
        let t = tower(2);
        let u = phi_vec(&[Felt(1), Felt(0), Felt(0), Felt(1)], &t).unwrap();
        assert_eq!(u, vec![Felt::ONE, t.omega()]);
        assert_eq!(phi_vec(&[Felt::ZERO; 4], &t).unwrap(), vec![Felt::ZERO; 2]);
        assert_eq!(phi_vec(&[Felt::ZERO; 3], &t), Err(Error::OddLength(3)));
        assert_eq!(phi_vec(&[Felt(2), Felt(0)], &t), Err(Error::FieldMismatch));
        assert_eq!(alternating_form(&[Felt::ONE], &[t.omega()], &t).unwrap(), Felt::ONE);
    }

    #[test]
    fn exhaustive_gf2_transport() {
        let t = tower(2);
        let f = t.base().clone();
        for n in 1..=3usize {
            let all: Vec<Vec<Felt>> =
                (0..1u32 << (2 * n)).map(|b| (0..2 * n).map(|i| Felt(((b >> i) & 1) as u16)).collect()).collect();
            for x in &all {
                let px = phi_vec(x, &t).unwrap();
                assert_eq!(hamming_weight(&px), symplectic::weight(x).unwrap());
                assert_eq!(phi_inverse(&px, &t), *x);
                for y in &all {
                    let py = phi_vec(y, &t).unwrap();
                    assert_eq!(
                        t.restrict(alternating_form(&px, &py, &t).unwrap()),
                        Some(symplectic::inner(&f, x, y).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn repetition_pair_image() {
        let t = tower(2);
        let f = t.base().clone();
        let g = Matrix::from_ints(&f, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]).unwrap();
        let a = phi_code(&LinearCode::from_generator(&g), &t).unwrap();
        assert_eq!((a.len(), a.dim()), (2, 2));
        let words = a.words();
        assert_eq!(words.len(), 4);
        assert_eq!(words.iter().filter(|w| hamming_weight(w) > 0).map(|w| hamming_weight(w)).min(), Some(2));
    }

    #[test]
    fn self_dual_image_and_acd() {
        let c = crate::families::hyperoval_self_dual(2).unwrap().so;
        let t = tower(4);
        let a = phi_code(&c, &t).unwrap();
        assert_eq!((a.len(), a.dim()), (6, 6));
        let words = a.words();
        assert_eq!(words.len(), 4096);
        let d = words.iter().map(|w| hamming_weight(w)).filter(|&w| w > 0).min().unwrap();
        assert_eq!(d, 4);
        assert_eq!(d, symplectic::min_distance(&c, &SearchOptions::default()).unwrap().weight);
        assert!(!is_trh_acd(&a).unwrap());
        let dual = additive_dual(&a).unwrap();
        assert_eq!(dual.preimage(), Some(&c));

        let full = LinearCode::full(t.base(), 4);
        assert!(is_trh_acd(&phi_code(&full, &t).unwrap()).unwrap());
        let zero = phi_code(&LinearCode::zero(t.base(), 4), &t).unwrap();
        assert_eq!(zero.words().len(), 1);
        assert!(is_trh_acd(&zero).unwrap());
    }

    #[test]
    fn missing_preimage() {
        let t = tower(2);
        let a = AdditiveCode { n: 1, tower: t, gens: vec![vec![Felt::ONE]], preimage: None };
        assert_eq!(is_trh_acd(&a), Err(Error::NotPhiImage));
    }

    proptest! {
        #[test]
        fn phi_is_an_isometry_over_gf3(n in 1usize..=6, seed in any::<u64>()) {
            let t = tower(3);
            let f = t.base().clone();
            let mut rng = crate::rng::XorShift64Star::new(seed);
            let mut draw = || (0..2 * n).map(|_| Felt(rng.below(3) as u16)).collect::<Vec<_>>();
            let (x, y) = (draw(), draw());
            let (px, py) = (phi_vec(&x, &t).unwrap(), phi_vec(&y, &t).unwrap());
            prop_assert_eq!(hamming_weight(&px), symplectic::weight(&x).unwrap());
            let a = alternating_form(&px, &py, &t).unwrap();
            prop_assert_eq!(t.restrict(a), Some(symplectic::inner(&f, &x, &y).unwrap()));
            prop_assert_eq!(alternating_form(&py, &px, &t).unwrap(), t.ext().neg(a));
            let mut sum = x.clone();
            f.add_assign(&mut sum, &y);
            let mut psum = px.clone();
            t.ext().add_assign(&mut psum, &py);
            prop_assert_eq!(phi_vec(&sum, &t).unwrap(), psum);
            let c = Felt(2);
            let mut cx = x.clone();
            f.scale(&mut cx, c);
            let mut pcx = px.clone();
            t.ext().scale(&mut pcx, t.embed(c));
            prop_assert_eq!(phi_vec(&cx, &t).unwrap(), pcx);
        }
    }
}
