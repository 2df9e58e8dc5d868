//! Arithmetic in GF(p^m) for q = p^m ≤ 2^16.
//!
//! Elements are packed base-p: digit `i` of the integer representation is the
//! coefficient of `x^i` in the polynomial basis. Multiplication goes through
//! full log/antilog tables; addition is XOR in characteristic 2, modular
//! addition in prime fields, a lookup table for q ≤ 256 and digit-wise
//! addition otherwise.
//!
//! The modulus is the least monic irreducible polynomial of degree m with
//! nonzero constant term, coefficients compared from the constant term
//! upwards. The generator is the primitive element with the smallest
//! representation.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// A field element in packed base-p representation.
///
/// The owning field is carried by the container (matrix, code, tower); a bare
/// `Felt` is only meaningful together with its [`Field`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Felt(pub u16);

impl Felt {
    pub const ZERO: Felt = Felt(0);
    pub const ONE: Felt = Felt(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn repr(self) -> u32 {
        u32::from(self.0)
    }
}

impl fmt::Display for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug)]
enum AddRule {
    Xor,
    Mod(u16),
    Table(Vec<u16>),
    Digits,
}

/// A finite field GF(p^m) with a fixed presentation.
#[derive(Clone)]
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    gen: Felt,
    exp: Vec<u16>,
    log: Vec<u32>,
    neg: Vec<u16>,
    add_rule: AddRule,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) modulus={:?}", self.p, self.m, self.modulus)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, m)` with `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn checked_order(p: u32, m: u32) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    if m == 0 {
        return Err(Error::ParameterOutOfRange("extension degree must be at least 1".into()));
    }
    let mut q: u64 = 1;
    for _ in 0..m {
        q *= u64::from(p);
        if q > u64::from(MAX_ORDER) {
            return Err(Error::FieldTooLarge { p, m });
        }
    }
    Ok(q as u32)
}

// Dense polynomials over GF(p), coefficient i = x^i, no trailing zeros.
mod poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p);
        while r.len() > db {
            let top = r.len() - 1;
            let c = (r[top] * lead_inv) % p;
            if c != 0 {
                for (i, &bi) in b.iter().enumerate() {
                    let idx = top - db + i;
                    r[idx] = (r[idx] + p - (c * bi) % p) % p;
                }
            }
            r = trim(r);
        }
        r
    }

    pub fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        rem(&trim(out), modulus, p)
    }

    pub fn inv_mod(a: u32, p: u32) -> u32 {
        (1..p).find(|x| (a * x) % p == 1).expect("nonzero residue")
    }

    /// Monic irreducibility by trial division with every monic polynomial of
    /// degree 1..=deg/2.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        if deg == 0 || f[deg] != 1 {
            return false;
        }
        if deg == 1 {
            return true;
        }
        if f[0] == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            let count = p.pow(d as u32);
            for t in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut rest = t;
                for _ in 0..d {
                    g.push(rest % p);
                    rest /= p;
                }
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl Field {
    /// Builds GF(p^m) with the canonical modulus.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        let q = checked_order(p, m)?;
        let modulus = least_irreducible(p, m as usize);
        Self::assemble(p, m, q, modulus)
    }

    /// Builds GF(p^m) from an explicit monic modulus (coefficients from x^0 to x^m).
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Field> {
        if modulus.len() < 2 {
            return Err(Error::ReducibleModulus);
        }
        let m = (modulus.len() - 1) as u32;
        let q = checked_order(p, m)?;
        if modulus.iter().any(|&c| c >= p) || !poly::is_irreducible(modulus, p) {
            return Err(Error::ReducibleModulus);
        }
        Self::assemble(p, m, q, modulus.to_vec())
    }

    /// Shorthand for the canonical field of order `q`.
    pub fn of_order(q: u32) -> Result<Field> {
        let (p, m) = prime_power(q).ok_or(Error::NonPrime(q))?;
        Field::new(p, m)
    }

    fn assemble(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Result<Field> {
        let order = q - 1;
        let mut found = None;
        for cand in 1..q {
            let g = digits_of(cand, p, m);
            let mut powers = Vec::with_capacity(order as usize);
            let mut cur = vec![1u32];
            loop {
                powers.push(pack(&cur, p));
                cur = poly::mul_mod(&cur, &poly::trim(g.clone()), &modulus, p);
                if cur == [1] {
                    break;
                }
                if powers.len() > order as usize {
                    break;
                }
            }
            if powers.len() == order as usize {
                found = Some((cand, powers));
                break;
            }
        }
        let (gen, powers) = found.expect("a finite field has a primitive element");

        let mut exp = Vec::with_capacity(2 * order as usize);
        exp.extend(powers.iter().map(|&v| v as u16));
        exp.extend(powers.iter().map(|&v| v as u16));
        let mut log = vec![0u32; q as usize];
        for (i, &v) in powers.iter().enumerate() {
            log[v as usize] = i as u32;
        }

        let neg: Vec<u16> = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits_of(a, p, m).iter().map(|&c| (p - c) % p).collect();
                pack(&d, p) as u16
            })
            .collect();

        let add_rule = if p == 2 {
            AddRule::Xor
        } else if m == 1 {
            AddRule::Mod(p as u16)
        } else if q <= 256 {
            let mut table = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = digit_add(a, b, p, m) as u16;
                }
            }
            AddRule::Table(table)
        } else {
            AddRule::Digits
        };

        Ok(Field { p, m, q, modulus, gen: Felt(gen as u16), exp, log, neg, add_rule })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients from x^0 up to the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The fixed primitive element.
    pub fn generator(&self) -> Felt {
        self.gen
    }

    /// Validated element constructor.
    pub fn elem(&self, repr: u32) -> Result<Felt> {
        if repr < self.q {
            Ok(Felt(repr as u16))
        } else {
            Err(Error::ParameterOutOfRange(format!("{repr} is not an element of GF({})", self.q)))
        }
    }

    /// All elements in representation order.
    pub fn elements(&self) -> impl Iterator<Item = Felt> {
        (0..self.q).map(|v| Felt(v as u16))
    }

    /// Nonzero elements in representation order.
    pub fn nonzero(&self) -> impl Iterator<Item = Felt> {
        (1..self.q).map(|v| Felt(v as u16))
    }

    /// The basis element x^s.
    pub fn basis(&self, s: u32) -> Felt {
        Felt(self.p.pow(s) as u16)
    }

    #[inline]
    pub fn add(&self, a: Felt, b: Felt) -> Felt {
        Felt(match &self.add_rule {
            AddRule::Xor => a.0 ^ b.0,
            AddRule::Mod(p) => {
                let s = a.0 + b.0;
                if s >= *p {
                    s - p
                } else {
                    s
                }
            }
            AddRule::Table(t) => t[a.0 as usize * self.q as usize + b.0 as usize],
            AddRule::Digits => digit_add(a.repr(), b.repr(), self.p, self.m) as u16,
        })
    }

    #[inline]
    pub fn neg(&self, a: Felt) -> Felt {
        Felt(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Felt, b: Felt) -> Felt {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Felt, b: Felt) -> Felt {
        if a.0 == 0 || b.0 == 0 {
            return Felt::ZERO;
        }
        Felt(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Felt) -> Result<Felt> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        Ok(Felt(self.exp[((order - self.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Felt, b: Felt) -> Result<Felt> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: Felt, e: u64) -> Felt {
        if e == 0 {
            return Felt::ONE;
        }
        if a.is_zero() {
            return Felt::ZERO;
        }
        let order = u64::from(self.q - 1);
        let l = (u64::from(self.log[a.0 as usize]) * (e % order)) % order;
        Felt(self.exp[l as usize])
    }

    /// Discrete logarithm to the base of [`Field::generator`].
    pub fn log(&self, a: Felt) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    /// `gen^e`.
    pub fn exp(&self, e: u64) -> Felt {
        Felt(self.exp[(e % u64::from(self.q - 1)) as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Felt) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.q - 1;
        Some(n / gcd(n, l))
    }

    /// Embeds a prime-field integer.
    pub fn from_int(&self, v: i64) -> Felt {
        Felt(v.rem_euclid(i64::from(self.p)) as u16)
    }

    /// `dst[i] += c * src[i]`.
    pub fn axpy(&self, dst: &mut [Felt], c: Felt, src: &[Felt]) {
        debug_assert_eq!(dst.len(), src.len());
        if c.is_zero() {
            return;
        }
        if c == Felt::ONE {
            self.add_assign(dst, src);
            return;
        }
        let lc = self.log[c.0 as usize] as usize;
        let scaled = |s: Felt| -> Felt {
            if s.is_zero() {
                Felt::ZERO
            } else {
                Felt(self.exp[lc + self.log[s.0 as usize] as usize])
            }
        };
        match &self.add_rule {
            AddRule::Xor => {
                for (d, &s) in dst.iter_mut().zip(src) {
                    d.0 ^= scaled(s).0;
                }
            }
            _ => {
                for (d, &s) in dst.iter_mut().zip(src) {
                    if !s.is_zero() {
                        *d = self.add(*d, scaled(s));
                    }
                }
            }
        }
    }

    /// `dst[i] += src[i]`.
    #[inline]
    pub fn add_assign(&self, dst: &mut [Felt], src: &[Felt]) {
        match &self.add_rule {
            AddRule::Xor => {
                for (d, &s) in dst.iter_mut().zip(src) {
                    d.0 ^= s.0;
                }
            }
            AddRule::Mod(p) => {
                let p = *p;
                for (d, &s) in dst.iter_mut().zip(src) {
                    let v = d.0 + s.0;
                    d.0 = if v >= p { v - p } else { v };
                }
            }
            _ => {
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d = self.add(*d, s);
                }
            }
        }
    }

    /// `v[i] *= c`.
    pub fn scale(&self, v: &mut [Felt], c: Felt) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    /// Euclidean inner product.
    pub fn dot(&self, a: &[Felt], b: &[Felt]) -> Felt {
        a.iter().zip(b).fold(Felt::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// The descriptor line used by the matrix file format.
    pub fn descriptor(&self) -> String {
        let coeffs: Vec<String> = self.modulus.iter().map(u32::to_string).collect();
        format!("field p={} m={} modulus={}", self.p, self.m, coeffs.join(","))
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn digits_of(mut v: u32, p: u32, m: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(m as usize);
    for _ in 0..m {
        d.push(v % p);
        v /= p;
    }
    d
}

fn pack(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn digit_add(mut a: u32, mut b: u32, p: u32, m: u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    for _ in 0..m {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn least_irreducible(p: u32, m: usize) -> Vec<u32> {
    let count = p.pow(m as u32);
    for t in 0..count {
        // c0 is the most significant digit of t, so t walks the lexicographic
        // order on (c0, c1, ..., c_{m-1}).
        let mut f = vec![0u32; m + 1];
        let mut rest = t;
        for i in (0..m).rev() {
            f[i] = rest % p;
            rest /= p;
        }
        f[m] = 1;
        if f[0] != 0 && poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// GF(q²) as a degree-2 extension of GF(q), with a distinguished primitive
/// element ω and the embedding GF(q) → GF(q²).
#[derive(Clone, Debug)]
pub struct ExtTower {
    base: Arc<Field>,
    ext: Arc<Field>,
    omega: Felt,
    embed: Vec<Felt>,
    decompose: Vec<(Felt, Felt)>,
}

impl ExtTower {
    pub fn new(base: Arc<Field>) -> Result<ExtTower> {
        let q = base.order();
        if u64::from(q) * u64::from(q) > u64::from(MAX_ORDER) {
            return Err(Error::FieldTooLarge { p: base.characteristic(), m: 2 * base.degree() });
        }
        let ext = Arc::new(Field::new(base.characteristic(), 2 * base.degree())?);
        let omega = ext.generator();

        // A root of the base modulus inside the extension fixes the embedding.
        let modulus: Vec<Felt> = base.modulus().iter().map(|&c| ext.from_int(i64::from(c))).collect();
        let root = ext
            .elements()
            .find(|&x| modulus.iter().rev().fold(Felt::ZERO, |acc, &c| ext.add(ext.mul(acc, x), c)).is_zero())
            .expect("GF(q) embeds in GF(q^2)");
        let m = base.degree();
        let p = base.characteristic();
        let embed: Vec<Felt> = base
            .elements()
            .map(|a| {
                digits_of(a.repr(), p, m).iter().enumerate().fold(Felt::ZERO, |acc, (i, &c)| {
                    let term = ext.mul(ext.from_int(i64::from(c)), ext.pow(root, i as u64));
                    ext.add(acc, term)
                })
            })
            .collect();

        let mut decompose = vec![(Felt::ZERO, Felt::ZERO); (q * q) as usize];
        for a in base.elements() {
            for b in base.elements() {
                let c = ext.add(embed[a.0 as usize], ext.mul(omega, embed[b.0 as usize]));
                decompose[c.0 as usize] = (a, b);
            }
        }
        Ok(ExtTower { base, ext, omega, embed, decompose })
    }

    pub fn base(&self) -> &Arc<Field> {
        &self.base
    }

    pub fn ext(&self) -> &Arc<Field> {
        &self.ext
    }

    pub fn omega(&self) -> Felt {
        self.omega
    }

    #[inline]
    pub fn embed(&self, a: Felt) -> Felt {
        self.embed[a.0 as usize]
    }

    /// The unique `(a, b)` with `c = embed(a) + ω·embed(b)`.
    #[inline]
    pub fn decompose(&self, c: Felt) -> (Felt, Felt) {
        self.decompose[c.0 as usize]
    }

    pub fn compose(&self, a: Felt, b: Felt) -> Felt {
        self.ext.add(self.embed(a), self.ext.mul(self.omega, self.embed(b)))
    }

    /// Inverse of [`ExtTower::embed`] on the subfield; `None` outside it.
    pub fn restrict(&self, c: Felt) -> Option<Felt> {
        let (a, b) = self.decompose(c);
        b.is_zero().then_some(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_fields_upto(q_max: u32) -> Vec<Field> {
        (2..=q_max).filter_map(|q| Field::of_order(q).ok()).collect()
    }

    #[test]
    fn prime_field_gf2() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.modulus(), &[1, 1]);
        assert_eq!(f.generator(), Felt::ONE);
    }

    #[test]
    fn gf4_modulus_and_omega() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // repr 2 is x; x*x = x + 1 = repr 3
        assert_eq!(f.mul(Felt(2), Felt(2)), Felt(3));
    }

    #[test]
    fn rejects_non_prime_and_oversize() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NonPrime(4));
        assert!(matches!(Field::new(2, 17), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(Field::new(257, 2), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn modulus_choice_is_low_degree_first() {
        // (1,0,1) precedes (1,1,0): x^3 + x^2 + 1 comes before x^3 + x + 1.
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn small_examples() {
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(f3.neg(Felt(1)), Felt(2));
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(f5.pow(Felt(2), 4), Felt(1));
        assert_eq!(f5.inv(Felt::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f5.div(Felt(1), Felt::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn axioms_exhaustive_small_fields() {
        for f in all_fields_upto(16) {
            let els: Vec<Felt> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), Felt::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Felt::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn axioms_sampled_larger_fields() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for q in [27u32, 49, 81, 125, 243, 256, 343, 625, 729, 1024, 4096, 65536] {
            let f = Field::of_order(q).unwrap();
            for _ in 0..1000 {
                let a = Felt(rng.gen_range(0..q) as u16);
                let b = Felt(rng.gen_range(0..q) as u16);
                let c = Felt(rng.gen_range(0..q) as u16);
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), Felt::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Felt::ONE);
                }
            }
        }
    }

    #[test]
    fn generator_is_primitive() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256, 729] {
            let f = Field::of_order(q).unwrap();
            let g = f.generator();
            let n = u64::from(q - 1);
            assert_eq!(f.pow(g, n), Felt::ONE);
            for d in 1..n {
                if n % d == 0 {
                    assert_ne!(f.pow(g, d), Felt::ONE, "q={q} d={d}");
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_prime_subfield() {
        let f = Field::of_order(9).unwrap();
        for a in f.elements() {
            assert_eq!(f.pow(a, 9), a);
        }
        assert_eq!(f.pow(Felt(1), 3), Felt(1));
    }

    #[test]
    fn tower_gf2_to_gf4() {
        let t = ExtTower::new(Arc::new(Field::new(2, 1).unwrap())).unwrap();
        let ext = t.ext();
        let w = t.omega();
        assert_eq!(ext.mul(w, w), ext.add(w, Felt::ONE));
        assert_eq!(t.decompose(ext.add(w, Felt::ONE)), (Felt::ONE, Felt::ONE));
    }

    #[test]
    fn tower_embedding_and_decomposition() {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let base = Arc::new(Field::of_order(q).unwrap());
            let t = ExtTower::new(base.clone()).unwrap();
            let ext = t.ext().clone();
            for a in base.elements() {
                assert_eq!(t.decompose(t.embed(a)), (a, Felt::ZERO));
                for b in base.elements() {
                    assert_eq!(t.embed(base.add(a, b)), ext.add(t.embed(a), t.embed(b)));
                    assert_eq!(t.embed(base.mul(a, b)), ext.mul(t.embed(a), t.embed(b)));
                }
            }
            for c in ext.elements() {
                let (a, b) = t.decompose(c);
                assert_eq!(t.compose(a, b), c);
            }
            assert!(t.restrict(t.omega()).is_none());
            let wq = ext.pow(t.omega(), u64::from(q));
            assert!(!ext.sub(t.omega(), wq).is_zero());
        }
    }

    #[test]
    fn tower_rejects_large_base() {
        let base = Arc::new(Field::new(2, 9).unwrap());
        assert!(matches!(ExtTower::new(base), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn explicit_modulus_round_trip() {
        let f = Field::new(3, 3).unwrap();
        let g = Field::with_modulus(3, f.modulus()).unwrap();
        assert_eq!(f, g);
        assert_eq!(Field::with_modulus(2, &[1, 0, 1]).unwrap_err(), Error::ReducibleModulus);
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(729), Some((3, 6)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(2), Some((2, 1)));
    }
}
