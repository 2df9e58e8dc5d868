//! Exhaustive minimum-weight search over the nonzero codewords of a code.
//!
//! One representative per projective class is visited: the first nonzero
//! information symbol (position `L`) is fixed to 1 and the remaining
//! `k − L − 1` symbols run through GF(q). The trailing symbols are walked in
//! a modular p-ary Gray code over their base-p digits, so consecutive
//! codewords differ by a single `x^s · g_j` row and the weight is updated
//! from the sparse support of that row only.
//!
//! The index space is cut into fixed-size chunks that workers pull from a
//! shared counter. The answer is the first minimum in chunk order, which
//! makes the certificate independent of the number of workers.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::gf::{Felt, Field};
use crate::matgf::Matrix;

/// Default cap on the number of projective classes visited.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

const CHUNK: u64 = 1 << 16;

/// Which weight to minimize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    Hamming,
    /// Pairs `(i, n + i)` of a length-`2n` vector.
    Symplectic,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Maximum number of projective classes.
    pub budget: u64,
    /// Worker threads; 0 means one per available core.
    pub workers: usize,
    /// A known lower bound on the distance. Once a word of this weight is
    /// found, later chunks are abandoned.
    pub stop_at: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, workers: 0, stop_at: 1 }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions { budget, ..Self::default() }
    }

    pub(crate) fn worker_count(&self) -> usize {
        if self.workers > 0 {
            self.workers
        } else {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        }
    }
}

/// Result of an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeight {
    pub weight: usize,
    /// A codeword attaining `weight`.
    pub codeword: Vec<Felt>,
    /// Number of projective classes in the code.
    pub classes: u128,
}

/// `(q^k − 1)/(q − 1)`, saturating at `u128::MAX`.
pub fn projective_classes(q: u32, k: usize) -> u128 {
    let q = u128::from(q);
    let mut total: u128 = 0;
    let mut pow: u128 = 1;
    for _ in 0..k {
        total = total.saturating_add(pow);
        pow = pow.saturating_mul(q);
    }
    total
}

pub fn hamming_weight(v: &[Felt]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Number of pairs `(v_i, v_{n+i})` that are not both zero. `v` must have even length.
pub fn pair_weight(v: &[Felt]) -> usize {
    let h = v.len() / 2;
    (0..h).filter(|&i| !v[i].is_zero() || !v[h + i].is_zero()).count()
}

pub fn weight(v: &[Felt], metric: Metric) -> usize {
    match metric {
        Metric::Hamming => hamming_weight(v),
        Metric::Symplectic => pair_weight(v),
    }
}

#[derive(Clone, Copy)]
struct Job {
    lead: usize,
    start: u64,
    end: u64,
}

struct Plan<'a> {
    field: &'a Field,
    g: &'a Matrix,
    metric: Metric,
    /// Sparse `x^s · g_j` rows indexed by Gray digit, per lead position.
    deltas: Vec<Vec<Vec<(u32, Felt)>>>,
}

/// Minimum weight over the nonzero rowspace of `g`, whose rows must be
/// linearly independent.
pub fn min_weight(g: &Matrix, metric: Metric, opts: &SearchOptions) -> Result<MinWeight> {
    let k = g.rows();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    if metric == Metric::Symplectic && g.cols() % 2 == 1 {
        return Err(Error::OddLength(g.cols()));
    }
    let field = g.field().clone();
    let q = field.order();
    let classes = projective_classes(q, k);
    if classes > u128::from(opts.budget) {
        return Err(Error::BudgetExceeded { needed: classes, budget: opts.budget });
    }

    let m = field.degree() as usize;
    let mut deltas = Vec::with_capacity(k);
    for lead in 0..k {
        let digits = (k - lead - 1) * m;
        let rows: Vec<Vec<(u32, Felt)>> = (0..digits)
            .map(|t| {
                let j = lead + 1 + t / m;
                let c = field.basis((t % m) as u32);
                g.row(j)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(col, &v)| (col as u32, field.mul(c, v)))
                    .collect()
            })
            .collect();
        deltas.push(rows);
    }

    let mut jobs = Vec::new();
    for lead in 0..k {
        let count = (q as u64).pow((k - lead - 1) as u32);
        let mut start = 0;
        while start < count {
            let end = (start + CHUNK).min(count);
            jobs.push(Job { lead, start, end });
            start = end;
        }
    }

    let plan = Plan { field: &field, g, metric, deltas };
    let stop_at = opts.stop_at.max(1);
    let workers = opts.worker_count().min(jobs.len()).max(1);

    // Packed (weight << 32 | job); only ever decreases.
    let best = AtomicU64::new(u64::MAX);
    let next = AtomicUsize::new(0);
    let run = |local: &mut Vec<(usize, usize, Vec<Felt>)>| loop {
        let idx = next.fetch_add(1, Ordering::Relaxed);
        if idx >= jobs.len() {
            break;
        }
        let b = best.load(Ordering::Relaxed);
        if b != u64::MAX && (b >> 32) as usize <= stop_at && (b & 0xffff_ffff) < idx as u64 {
            continue;
        }
        if let Some((w, word)) = plan.run_job(jobs[idx], stop_at, &best, idx) {
            best.fetch_min(((w as u64) << 32) | idx as u64, Ordering::Relaxed);
            local.push((w, idx, word));
        }
    };

    let mut found = Vec::new();
    if workers == 1 {
        run(&mut found);
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    s.spawn(|| {
                        let mut local = Vec::new();
                        run(&mut local);
                        local
                    })
                })
                .collect();
            for h in handles {
                found.extend(h.join().expect("enumeration worker panicked"));
            }
        });
    }
    let (weight, _, codeword) =
        found.into_iter().min_by_key(|(w, idx, _)| (*w, *idx)).expect("a nonzero code has a nonzero word");
    Ok(MinWeight { weight, codeword, classes })
}

impl Plan<'_> {
    /// Minimum weight within one chunk, with the first word attaining it.
    fn run_job(&self, job: Job, stop_at: usize, best: &AtomicU64, idx: usize) -> Option<(usize, Vec<Felt>)> {
        let f = self.field;
        let p = u64::from(f.characteristic());
        let m = f.degree() as usize;
        let k = self.g.rows();
        let n = self.g.cols();
        let h = n / 2;
        let deltas = &self.deltas[job.lead];
        let ndigits = deltas.len();

        // Gray digits of `start`: g_t = (b_t − b_{t+1}) mod p.
        let mut b = Vec::with_capacity(ndigits + 1);
        let mut rest = job.start;
        for _ in 0..ndigits {
            b.push(rest % p);
            rest /= p;
        }
        b.push(0);
        let mut word = self.g.row(job.lead).to_vec();
        for j in job.lead + 1..k {
            let mut c: u64 = 0;
            for s in (0..m).rev() {
                let t = (j - job.lead - 1) * m + s;
                c = c * p + (b[t] + p - b[t + 1]) % p;
            }
            f.axpy(&mut word, Felt(c as u16), self.g.row(j));
        }

        let mut pair_nz = vec![0u8; if self.metric == Metric::Symplectic { h } else { 0 }];
        let mut w = match self.metric {
            Metric::Hamming => hamming_weight(&word),
            Metric::Symplectic => {
                for (c, v) in word.iter().enumerate() {
                    if !v.is_zero() {
                        pair_nz[c % h] += 1;
                    }
                }
                pair_nz.iter().filter(|&&c| c > 0).count()
            }
        };
        let mut best_w = w;
        let mut best_word = word.clone();
        if best_w <= stop_at {
            return Some((best_w, best_word));
        }

        for i in job.start + 1..job.end {
            if (i & 0xfff) == 0 {
                let g = best.load(Ordering::Relaxed);
                if g != u64::MAX && (g >> 32) as usize <= stop_at && (g & 0xffff_ffff) < idx as u64 {
                    return None;
                }
            }
            let mut tau = 0;
            let mut r = i;
            while r % p == 0 {
                r /= p;
                tau += 1;
            }
            for &(col, dv) in &deltas[tau] {
                let col = col as usize;
                let old = word[col];
                let new = f.add(old, dv);
                word[col] = new;
                if old.is_zero() != new.is_zero() {
                    match self.metric {
                        Metric::Hamming => {
                            if new.is_zero() {
                                w -= 1;
                            } else {
                                w += 1;
                            }
                        }
                        Metric::Symplectic => {
                            let pc = &mut pair_nz[col % h];
                            if new.is_zero() {
                                *pc -= 1;
                                if *pc == 0 {
                                    w -= 1;
                                }
                            } else {
                                *pc += 1;
                                if *pc == 1 {
                                    w += 1;
                                }
                            }
                        }
                    }
                }
            }
            if w < best_w {
                best_w = w;
                best_word.copy_from_slice(&word);
                if best_w <= stop_at {
                    break;
                }
            }
        }
        Some((best_w, best_word))
    }
}
