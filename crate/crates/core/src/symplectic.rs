//! The symplectic form on GF(q)^{2n}, symplectic weight and duality, and the
//! SO / DC / self-dual / LCD predicates.
//!
//! Coordinate `i` is paired with coordinate `n + i` (0-based) throughout.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use crate::code::LinearCode;
use crate::enumerate::{self, Metric, MinWeight, SearchOptions};
use crate::error::{Error, Result};
use crate::gf::{Felt, Field};
use crate::matgf::Matrix;

/// The `2n × 2n` matrix `[[O, I], [−I, O]]`.
pub fn omega(field: &Arc<Field>, n: usize) -> Matrix {
    let mut m = Matrix::zeros(field, 2 * n, 2 * n);
    let minus_one = field.neg(Felt::ONE);
    for i in 0..n {
        m.set(i, n + i, Felt::ONE);
        m.set(n + i, i, minus_one);
    }
    m
}

fn half(len: usize) -> Result<usize> {
    if len % 2 == 1 {
        Err(Error::OddLength(len))
    } else {
        Ok(len / 2)
    }
}

/// `x · Ω · yᵀ = Σ x_i y_{n+i} − x_{n+i} y_i`.
pub fn inner(field: &Field, x: &[Felt], y: &[Felt]) -> Result<Felt> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    let n = half(x.len())?;
    let mut acc = Felt::ZERO;
    for i in 0..n {
        acc = field.add(acc, field.mul(x[i], y[n + i]));
        acc = field.sub(acc, field.mul(x[n + i], y[i]));
    }
    Ok(acc)
}

/// Number of pairs `(x_i, x_{n+i}) ≠ (0, 0)`.
pub fn weight(x: &[Felt]) -> Result<usize> {
    half(x.len())?;
    Ok(enumerate::pair_weight(x))
}

/// `G · Ω · Gᵀ` for the canonical generator `G`.
pub fn gram(code: &LinearCode) -> Result<Matrix> {
    let n = half(code.len())?;
    let g = code.generator();
    g.matmul(&omega(code.field(), n))?.mul_transpose(g)
}

/// Symplectic dual, computed as `C^⊥E · Ω`.
pub fn dual(code: &LinearCode) -> Result<LinearCode> {
    let n = half(code.len())?;
    let h = code.parity_check();
    Ok(LinearCode::from_generator(&h.matmul(&omega(code.field(), n))?))
}

/// Self-orthogonal: `G Ω Gᵀ = O`.
pub fn is_so(code: &LinearCode) -> Result<bool> {
    Ok(gram(code)?.is_zero())
}

/// Dual-containing: `C^⊥s ⊆ C`.
pub fn is_dc(code: &LinearCode) -> Result<bool> {
    dual(code)?.is_subcode(code)
}

pub fn is_self_dual(code: &LinearCode) -> Result<bool> {
    Ok(is_so(code)? && 2 * code.dim() == code.len())
}

/// Linear complementary dual: `G Ω Gᵀ` nonsingular.
pub fn is_lcd(code: &LinearCode) -> Result<bool> {
    if code.dim() == 0 {
        return Err(Error::ZeroCode);
    }
    Ok(gram(code)?.rank() == code.dim())
}

/// Exact minimum symplectic weight by projective enumeration.
pub fn min_distance(code: &LinearCode, opts: &SearchOptions) -> Result<MinWeight> {
    half(code.len())?;
    enumerate::min_weight(code.generator(), Metric::Symplectic, opts)
}

/// `⌊(len − k + 2)/2⌋` for a code of length `len = 2n`.
pub fn singleton_bound(len: usize, k: usize) -> usize {
    (len + 2 - k) / 2
}

/// Gap to the symplectic Singleton bound; zero means symplectic MDS.
pub fn singleton_defect(len: usize, k: usize, d: Option<usize>) -> Result<i64> {
    let d = d.ok_or(Error::DistanceUnknown)?;
    Ok(singleton_bound(len, k) as i64 - d as i64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bounded {
    /// The smallest symplectic weight of a nonzero codeword, with a witness.
    Found { weight: usize, codeword: Vec<Felt> },
    /// No nonzero codeword of weight ≤ `w_max`; the distance exceeds it.
    NotFound { w_max: usize },
}

/// Searches every vector of symplectic weight `1..=w_max` for a codeword.
///
/// Membership is tested by syndrome. The last pair of each candidate is
/// looked up in a table of per-pair syndromes, so the work for weight `w`
/// is `C(n, w−1)·(q+1)·(q²−1)^{w−2}` lookups.
pub fn bounded_search(code: &LinearCode, w_max: usize, workers: usize) -> Result<Bounded> {
    let n = half(code.len())?;
    if w_max == 0 {
        return Err(Error::ParameterOutOfRange("w_max must be at least 1".into()));
    }
    let f = code.field().clone();
    let h = code.parity_check();
    let r = h.rows();
    let len = code.len();
    if code.dim() > 0 && r == 0 {
        let mut word = vec![Felt::ZERO; len];
        word[0] = Felt::ONE;
        return Ok(Bounded::Found { weight: 1, codeword: word });
    }
    if code.dim() == 0 {
        return Ok(Bounded::NotFound { w_max });
    }

    let table = SyndromeTable::new(&f, &h, n);
    let workers = if workers > 0 { workers } else { std::thread::available_parallelism().map_or(1, |x| x.get()) };

    for w in 1..=w_max.min(n) {
        if let Some(choice) = table.search_weight(w, workers) {
            let mut word = vec![Felt::ZERO; len];
            for (pos, a, b) in choice {
                word[pos] = a;
                word[n + pos] = b;
            }
            debug_assert!(code.contains(&word).unwrap());
            return Ok(Bounded::Found { weight: w, codeword: word });
        }
    }
    Ok(Bounded::NotFound { w_max })
}

struct SyndromeTable {
    field: Arc<Field>,
    n: usize,
    r: usize,
    q: usize,
    /// Syndrome of pair value `idx` at position `pos`, flattened.
    syn: Vec<Felt>,
    /// Syndrome → (position, pair index), positions ascending.
    lookup: HashMap<Vec<Felt>, Vec<(u32, u32)>>,
    reps: Vec<usize>,
}

impl SyndromeTable {
    fn new(f: &Arc<Field>, h: &Matrix, n: usize) -> SyndromeTable {
        let q = f.order() as usize;
        let r = h.rows();
        let pairs = q * q - 1;
        let mut syn = vec![Felt::ZERO; n * pairs * r];
        let mut lookup: HashMap<Vec<Felt>, Vec<(u32, u32)>> = HashMap::new();
        let left: Vec<Vec<Felt>> = (0..n).map(|i| (0..r).map(|j| h.get(j, i)).collect()).collect();
        let right: Vec<Vec<Felt>> = (0..n).map(|i| (0..r).map(|j| h.get(j, n + i)).collect()).collect();
        for pos in 0..n {
            for idx in 0..pairs {
                let (a, b) = Self::pair(q, idx);
                let s = &mut syn[(pos * pairs + idx) * r..(pos * pairs + idx + 1) * r];
                f.axpy(s, a, &left[pos]);
                f.axpy(s, b, &right[pos]);
                lookup.entry(s.to_vec()).or_default().push((pos as u32, idx as u32));
            }
        }
        // (0, 1) and (1, b) represent every projective pair class.
        let mut reps = vec![Self::index(q, Felt::ZERO, Felt::ONE)];
        reps.extend((0..q).map(|b| Self::index(q, Felt::ONE, Felt(b as u16))));
        SyndromeTable { field: f.clone(), n, r, q, syn, lookup, reps }
    }

    fn pair(q: usize, idx: usize) -> (Felt, Felt) {
        let v = idx + 1;
        (Felt((v / q) as u16), Felt((v % q) as u16))
    }

    fn index(q: usize, a: Felt, b: Felt) -> usize {
        a.0 as usize * q + b.0 as usize - 1
    }

    fn syndrome(&self, pos: usize, idx: usize) -> &[Felt] {
        let pairs = self.q * self.q - 1;
        &self.syn[(pos * pairs + idx) * self.r..(pos * pairs + idx + 1) * self.r]
    }

    /// First weight-`w` codeword in job order, as (position, a, b) triples.
    fn search_weight(&self, w: usize, workers: usize) -> Option<Vec<(usize, Felt, Felt)>> {
        if w == 1 {
            for pos in 0..self.n {
                for &idx in &self.reps {
                    if self.syndrome(pos, idx).iter().all(|s| s.is_zero()) {
                        let (a, b) = Self::pair(self.q, idx);
                        return Some(vec![(pos, a, b)]);
                    }
                }
            }
            return None;
        }
        // Jobs are indexed by the largest prefix position; the looked-up pair sits above it.
        let first_job = w - 2;
        let jobs: Vec<usize> = (first_job..self.n.saturating_sub(1)).collect();
        if jobs.is_empty() {
            return None;
        }
        let winner = AtomicUsize::new(usize::MAX);
        let next = AtomicUsize::new(0);
        let run = || {
            let mut out = Vec::new();
            loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= jobs.len() || i > winner.load(Ordering::Relaxed) {
                    break;
                }
                let mut state = Dfs {
                    table: self,
                    w,
                    acc: vec![vec![Felt::ZERO; self.r]; w],
                    choice: Vec::with_capacity(w),
                    target: vec![Felt::ZERO; self.r],
                };
                if let Some(found) = state.run(jobs[i]) {
                    winner.fetch_min(i, Ordering::Relaxed);
                    out.push((i, found));
                    break;
                }
            }
            out
        };
        let workers = workers.min(jobs.len()).max(1);
        let mut found = Vec::new();
        if workers == 1 {
            found = run();
        } else {
            std::thread::scope(|s| {
                let hs: Vec<_> = (0..workers).map(|_| s.spawn(run)).collect();
                for h in hs {
                    found.extend(h.join().expect("search worker panicked"));
                }
            });
        }
        found.into_iter().min_by_key(|(i, _)| *i).map(|(_, c)| c)
    }
}

struct Dfs<'a> {
    table: &'a SyndromeTable,
    w: usize,
    acc: Vec<Vec<Felt>>,
    choice: Vec<(usize, usize)>,
    target: Vec<Felt>,
}

impl Dfs<'_> {
    fn run(&mut self, top: usize) -> Option<Vec<(usize, Felt, Felt)>> {
        self.choice.clear();
        if self.place(0, top) {
            let t = self.table;
            Some(
                self.choice
                    .iter()
                    .map(|&(pos, idx)| {
                        let (a, b) = SyndromeTable::pair(t.q, idx);
                        (pos, a, b)
                    })
                    .collect(),
            )
        } else {
            None
        }
    }

    /// Assigns prefix slot `depth` at position `pos` and recurses.
    fn place(&mut self, depth: usize, pos: usize) -> bool {
        let t = self.table;
        let f = &t.field;
        let prefix = self.w - 1;
        let last = depth + 1 == prefix;
        let all: Vec<usize>;
        let values: &[usize] = if last {
            &t.reps
        } else {
            all = (0..t.q * t.q - 1).collect();
            &all
        };
        for &idx in values {
            let (head, tail) = self.acc.split_at_mut(depth + 1);
            let cur = &mut tail[0];
            if depth == 0 {
                cur.iter_mut().for_each(|v| *v = Felt::ZERO);
            } else {
                cur.copy_from_slice(&head[depth]);
            }
            f.add_assign(cur, t.syndrome(pos, idx));
            self.choice.push((pos, idx));
            if last {
                for (d, &s) in self.target.iter_mut().zip(self.acc[depth + 1].iter()) {
                    *d = f.neg(s);
                }
                let top = self.choice[0].0;
                if let Some(entries) = t.lookup.get(self.target.as_slice()) {
                    if let Some(&(p, i)) = entries.iter().find(|&&(p, _)| p as usize > top) {
                        self.choice.push((p as usize, i as usize));
                        return true;
                    }
                }
            } else {
                let remaining = prefix - depth - 1;
                for next in remaining - 1..pos {
                    if self.place(depth + 1, next) {
                        return true;
                    }
                }
            }
            self.choice.pop();
        }
        false
    }
}
